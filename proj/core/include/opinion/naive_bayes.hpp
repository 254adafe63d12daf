#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace opinion {

enum class NbClass : int { Positive = 0, Negative = 1 };

const char* nb_class_name(NbClass c);

struct NbOptions {
  // Default is bool document-frequency weighting: a word counts once
  // per containing document. Term frequency is available behind this
  // flag but is not the reference behavior.
  bool use_term_frequency = false;
};

struct NbModel {
  std::array<double, 2> prior{};
  std::map<std::string, std::array<uint64_t, 2>, std::less<>> weights;
  std::array<uint64_t, 2> class_weight_sum{};
  uint64_t v_total = 0;  // sum of all weights across both classes
  double delta = 0.0;    // 1 / v_total
  NbOptions options;

  uint64_t weight(std::string_view word, NbClass c) const;

  void save(const std::filesystem::path& path) const;
  static NbModel load(const std::filesystem::path& path);
};

struct PolarityResult {
  NbClass label = NbClass::Positive;
  std::array<double, 2> log_score{};
  double confidence = 0.5;  // posterior of the winning class
};

using LabeledDoc = std::pair<std::vector<std::string>, NbClass>;

// Prior from document counts, conditional weights from (document or
// term) frequency. Throws std::invalid_argument when a class has no
// documents or the corpus contains no tokens at all.
NbModel nb_train(const std::vector<LabeledDoc>& labeled, NbOptions options = {});

// Smoothed log-posterior argmax; exactly equal scores go to positive.
// Unseen words still contribute their smoothing-only term. An empty
// token list decides by prior alone.
PolarityResult nb_classify(const NbModel& model, const std::vector<std::string>& tokens);

// JSONL records {"tokens": [...], "label": "positive"|"negative"}.
std::vector<LabeledDoc> read_labeled_jsonl(const std::filesystem::path& path);

}  // namespace opinion
