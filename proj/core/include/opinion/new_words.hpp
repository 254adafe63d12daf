#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

namespace opinion {

struct NewWordCandidate {
  std::string ngram;
  uint64_t freq_today = 0;
  double freq_baseline = 0.0;  // per-day average over the prior slices
  double cohesion = 0.0;       // min split PMI, bits
  double boundary_entropy = 0.0;
  double burst_ratio = 0.0;    // (freq_today + 1) / (freq_baseline + 1)
};

struct MinerParams {
  uint64_t min_freq = 5;
  double min_cohesion = 1.0;
  double min_boundary_entropy = 1.0;
  double min_burst_ratio = 3.0;
};

// Mines bursty character n-grams (2-4 chars) from the final slice,
// using the earlier slices as the frequency baseline. N-grams are
// counted inside maximal runs of word characters (CJK or ASCII
// alphanumerics) over each slice's concatenated tokens, so words the
// segmenter over-split can recombine; callers should separate
// unrelated texts with a non-word token. A candidate must clear all
// four thresholds and not appear in known_words. Output is sorted by
// burst_ratio desc, freq_today desc, then ngram. Throws
// std::invalid_argument with fewer than 2 slices.
std::vector<NewWordCandidate> mine_new_words(
    const std::vector<std::vector<std::string>>& daily_slices,
    const MinerParams& params, const std::set<std::string>& known_words = {});

void write_candidates_jsonl(const std::filesystem::path& path,
                            const std::vector<NewWordCandidate>& candidates);

}  // namespace opinion
