#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opinion/emotions.hpp"
#include "opinion/lexicon.hpp"

namespace opinion {

struct EvalComment {
  std::string id;
  std::vector<std::string> tokens;
};

struct TruthLabel {
  std::string id;
  std::optional<Polarity> polarity;
  std::optional<Emotion> dominant;
  bool unjudgeable = false;
};

// A scorer maps one comment to an emotion vector; throwing marks the
// comment unjudgeable.
using Scorer = std::function<EmotionVector(const EvalComment&)>;

struct SamplePartition {
  std::vector<std::vector<EvalComment>> samples;
  std::map<std::string, TruthLabel> truth;

  // Deterministic split: comments sorted by id, then dealt round-robin
  // into n_samples groups. Throws std::invalid_argument for
  // n_samples < 1.
  static SamplePartition build(std::vector<EvalComment> comments,
                               const std::vector<TruthLabel>& labels,
                               size_t n_samples = 8);
};

struct ScorerEval {
  // L1 distance between the scorer's and the truth's normalized
  // per-sample emotion-proportion vectors.
  std::vector<double> per_sample_error;
  // Per-comment polarity error |sign(total_polarity) - truth_sign| / 2,
  // split at the 0.2 boundary.
  uint64_t n_below = 0;
  uint64_t n_above = 0;
};

struct ErrorReport {
  ScorerEval system;
  ScorerEval baseline;
  uint64_t n_comments = 0;
  uint64_t n_judged = 0;
  uint64_t n_unjudgeable = 0;
  double unjudgeable_rate = 0.0;
};

// Scores every judgeable comment with both scorers and compares each
// against truth. A comment counts as unjudgeable when its truth label
// is missing/unjudgeable or either scorer throws; such comments join
// neither gradient bucket.
ErrorReport run_comparison(const SamplePartition& partition, const Scorer& system,
                           const Scorer& baseline);

// Flat all-ones vector: every emotion equally likely, zero polarity.
Scorer make_uniform_baseline();
// Lexicon traversal only, no fallback.
Scorer make_lexicon_baseline(const Lexicon& lex, const FunctionWordTables& fw);
// Replays the truth labels (one-hot dominant, ±1 polarity); the
// self-comparison oracle.
Scorer make_truth_scorer(const std::map<std::string, TruthLabel>& truth);

// JSONL records {id, polarity, dominant_emotion}; dominant_emotion
// "UNJUDGEABLE" marks a comment no annotator could judge.
std::vector<TruthLabel> read_truth_jsonl(const std::filesystem::path& path);

void write_eval_report_json(const std::filesystem::path& path, const ErrorReport& report);
void write_eval_report_text(const std::filesystem::path& path, const ErrorReport& report);

}  // namespace opinion
