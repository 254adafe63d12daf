#include "opinion/cooccurrence.hpp"

#include <stdexcept>

namespace opinion {

uint64_t CooccurrenceStats::count(std::string_view word) const {
  const auto it = word_count.find(word);
  return it == word_count.end() ? 0 : it->second;
}

uint64_t CooccurrenceStats::pair(std::string_view a, std::string_view b) const {
  std::pair<std::string, std::string> key{std::string(a), std::string(b)};
  if (key.second < key.first) std::swap(key.first, key.second);
  const auto it = pair_count.find(key);
  return it == pair_count.end() ? 0 : it->second;
}

CooccurrenceStats build_cooccurrence(
    const std::vector<std::vector<std::string>>& sentences, int window) {
  if (window < 1) throw std::invalid_argument("cooccurrence window must be >= 1");
  CooccurrenceStats stats;
  stats.window = window;
  for (const auto& sentence : sentences) {
    for (size_t i = 0; i < sentence.size(); ++i) {
      ++stats.word_count[sentence[i]];
      ++stats.total_tokens;
      const size_t limit = std::min(sentence.size(), i + 1 + static_cast<size_t>(window));
      for (size_t j = i + 1; j < limit; ++j) {
        std::pair<std::string, std::string> key{sentence[i], sentence[j]};
        if (key.second < key.first) std::swap(key.first, key.second);
        ++stats.pair_count[key];
      }
    }
  }
  return stats;
}

}  // namespace opinion
