#include "opinion/new_words.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "opinion/errors.hpp"
#include "opinion/utf8.hpp"

namespace opinion {

namespace {

constexpr size_t kMinLen = 2;
constexpr size_t kMaxLen = 4;

std::vector<std::vector<char32_t>> word_char_runs(const std::vector<std::string>& tokens) {
  std::vector<std::vector<char32_t>> runs;
  std::vector<char32_t> current;
  for (const auto& token : tokens) {
    for (const char32_t cp : utf8_codepoints(token)) {
      if (is_word_char(cp)) {
        current.push_back(cp);
      } else if (!current.empty()) {
        runs.push_back(std::move(current));
        current.clear();
      }
    }
  }
  if (!current.empty()) runs.push_back(std::move(current));
  return runs;
}

std::string encode_range(const std::vector<char32_t>& run, size_t pos, size_t len) {
  std::string s;
  for (size_t i = 0; i < len; ++i) utf8_append(s, run[pos + i]);
  return s;
}

struct FinalDayCounts {
  // counts[len] maps an n-gram of that length to its occurrences.
  std::array<std::map<std::string, uint64_t>, kMaxLen + 1> counts;
  std::array<uint64_t, kMaxLen + 1> totals{};
  std::map<std::string, std::map<char32_t, uint64_t>> left_neighbors;
  std::map<std::string, std::map<char32_t, uint64_t>> right_neighbors;
};

double entropy_bits(const std::map<char32_t, uint64_t>& dist) {
  uint64_t total = 0;
  for (const auto& [cp, n] : dist) total += n;
  if (total == 0) return 0.0;
  double h = 0.0;
  for (const auto& [cp, n] : dist) {
    const double p = static_cast<double>(n) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

std::vector<NewWordCandidate> mine_new_words(
    const std::vector<std::vector<std::string>>& daily_slices,
    const MinerParams& params, const std::set<std::string>& known_words) {
  if (daily_slices.size() < 2) {
    throw std::invalid_argument("mine_new_words: need at least 2 daily slices");
  }
  const size_t n_baseline = daily_slices.size() - 1;

  // Baseline: total occurrences per n-gram over all slices but the last.
  std::map<std::string, uint64_t> baseline;
  for (size_t d = 0; d + 1 < daily_slices.size(); ++d) {
    for (const auto& run : word_char_runs(daily_slices[d])) {
      for (size_t len = kMinLen; len <= kMaxLen && len <= run.size(); ++len) {
        for (size_t pos = 0; pos + len <= run.size(); ++pos) {
          ++baseline[encode_range(run, pos, len)];
        }
      }
    }
  }

  FinalDayCounts today;
  for (const auto& run : word_char_runs(daily_slices.back())) {
    for (size_t len = 1; len <= kMaxLen && len <= run.size(); ++len) {
      for (size_t pos = 0; pos + len <= run.size(); ++pos) {
        const std::string g = encode_range(run, pos, len);
        ++today.counts[len][g];
        ++today.totals[len];
        if (len >= kMinLen) {
          if (pos > 0) ++today.left_neighbors[g][run[pos - 1]];
          if (pos + len < run.size()) ++today.right_neighbors[g][run[pos + len]];
        }
      }
    }
  }

  std::vector<NewWordCandidate> out;
  for (size_t len = kMinLen; len <= kMaxLen; ++len) {
    for (const auto& [ngram, freq] : today.counts[len]) {
      if (freq < params.min_freq || known_words.count(ngram) > 0) continue;

      NewWordCandidate cand;
      cand.ngram = ngram;
      cand.freq_today = freq;
      const auto base_it = baseline.find(ngram);
      const uint64_t base_total = base_it == baseline.end() ? 0 : base_it->second;
      cand.freq_baseline =
          static_cast<double>(base_total) / static_cast<double>(n_baseline);
      cand.burst_ratio =
          (static_cast<double>(freq) + 1.0) / (cand.freq_baseline + 1.0);
      if (cand.burst_ratio < params.min_burst_ratio) continue;

      // Cohesion: the weakest split of the n-gram into prefix + suffix,
      // as pointwise MI between the two parts.
      const std::vector<char32_t> cps = utf8_codepoints(ngram);
      const double p_gram =
          static_cast<double>(freq) / static_cast<double>(today.totals[len]);
      double cohesion = std::numeric_limits<double>::infinity();
      for (size_t cut = 1; cut < len; ++cut) {
        const std::string left = encode_range(cps, 0, cut);
        const std::string right = encode_range(cps, cut, len - cut);
        const double p_left = static_cast<double>(today.counts[cut].at(left)) /
                              static_cast<double>(today.totals[cut]);
        const double p_right = static_cast<double>(today.counts[len - cut].at(right)) /
                               static_cast<double>(today.totals[len - cut]);
        cohesion = std::min(cohesion, std::log2(p_gram / (p_left * p_right)));
      }
      cand.cohesion = cohesion;
      if (cand.cohesion < params.min_cohesion) continue;

      const auto left_it = today.left_neighbors.find(ngram);
      const auto right_it = today.right_neighbors.find(ngram);
      const double h_left =
          left_it == today.left_neighbors.end() ? 0.0 : entropy_bits(left_it->second);
      const double h_right =
          right_it == today.right_neighbors.end() ? 0.0 : entropy_bits(right_it->second);
      cand.boundary_entropy = std::min(h_left, h_right);
      if (cand.boundary_entropy < params.min_boundary_entropy) continue;

      out.push_back(std::move(cand));
    }
  }

  std::sort(out.begin(), out.end(), [](const NewWordCandidate& a, const NewWordCandidate& b) {
    if (a.burst_ratio != b.burst_ratio) return a.burst_ratio > b.burst_ratio;
    if (a.freq_today != b.freq_today) return a.freq_today > b.freq_today;
    return a.ngram < b.ngram;
  });
  return out;
}

void write_candidates_jsonl(const std::filesystem::path& path,
                            const std::vector<NewWordCandidate>& candidates) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const auto& c : candidates) {
    nlohmann::json j;
    j["ngram"] = c.ngram;
    j["freq_today"] = c.freq_today;
    j["freq_baseline"] = c.freq_baseline;
    j["cohesion"] = c.cohesion;
    j["boundary_entropy"] = c.boundary_entropy;
    j["burst_ratio"] = c.burst_ratio;
    out << j.dump() << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace opinion
