#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace opinion {

// Token and unordered-pair counts within a sliding window, the raw
// material for PMI. Pairs are stored under the lexicographically
// ordered key, so lookups are symmetric.
struct CooccurrenceStats {
  int window = 5;
  std::map<std::string, uint64_t, std::less<>> word_count;
  std::map<std::pair<std::string, std::string>, uint64_t> pair_count;
  uint64_t total_tokens = 0;

  uint64_t count(std::string_view word) const;
  uint64_t pair(std::string_view a, std::string_view b) const;
};

// Counts each unordered token pair at distance <= window, never across
// sentence boundaries. Throws std::invalid_argument for window < 1.
CooccurrenceStats build_cooccurrence(
    const std::vector<std::vector<std::string>>& sentences, int window = 5);

}  // namespace opinion
