#include "opinion/eval.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "opinion/emotion_scorer.hpp"
#include "opinion/errors.hpp"

namespace opinion {

namespace {

using json = nlohmann::json;

constexpr double kGradientBoundary = 0.2;

double sign_of(double v) {
  if (v > 0.0) return 1.0;
  if (v < 0.0) return -1.0;
  return 0.0;
}

std::array<double, kEmotionCount> normalized(const std::array<double, kEmotionCount>& mass) {
  double total = 0.0;
  for (double v : mass) total += v;
  std::array<double, kEmotionCount> out{};
  if (total == 0.0) return out;
  for (int e = 0; e < kEmotionCount; ++e) out[e] = mass[e] / total;
  return out;
}

double l1_distance(const std::array<double, kEmotionCount>& a,
                   const std::array<double, kEmotionCount>& b) {
  double d = 0.0;
  for (int e = 0; e < kEmotionCount; ++e) d += std::abs(a[e] - b[e]);
  return d;
}

json scorer_eval_json(const ScorerEval& ev) {
  json j;
  j["per_sample_error"] = ev.per_sample_error;
  j["gradient"] = {{"below_boundary", ev.n_below}, {"at_or_above_boundary", ev.n_above}};
  return j;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string pct(uint64_t n, uint64_t total) {
  char buf[64];
  const double p = total == 0 ? 0.0 : 100.0 * static_cast<double>(n) / total;
  std::snprintf(buf, sizeof(buf), "%llu (%.1f%%)", static_cast<unsigned long long>(n), p);
  return buf;
}

}  // namespace

SamplePartition SamplePartition::build(std::vector<EvalComment> comments,
                                       const std::vector<TruthLabel>& labels,
                                       size_t n_samples) {
  if (n_samples < 1) throw std::invalid_argument("need at least one sample");
  SamplePartition partition;
  partition.samples.resize(n_samples);
  for (const auto& label : labels) partition.truth[label.id] = label;

  std::stable_sort(comments.begin(), comments.end(),
                   [](const EvalComment& a, const EvalComment& b) { return a.id < b.id; });
  for (size_t i = 0; i < comments.size(); ++i) {
    partition.samples[i % n_samples].push_back(std::move(comments[i]));
  }
  return partition;
}

ErrorReport run_comparison(const SamplePartition& partition, const Scorer& system,
                           const Scorer& baseline) {
  ErrorReport report;

  for (const auto& sample : partition.samples) {
    std::array<double, kEmotionCount> sys_mass{};
    std::array<double, kEmotionCount> base_mass{};
    std::array<double, kEmotionCount> truth_mass{};

    for (const auto& comment : sample) {
      ++report.n_comments;
      const auto truth_it = partition.truth.find(comment.id);
      if (truth_it == partition.truth.end() || truth_it->second.unjudgeable ||
          !truth_it->second.polarity || !truth_it->second.dominant) {
        ++report.n_unjudgeable;
        continue;
      }
      const TruthLabel& truth = truth_it->second;

      EmotionVector sys_vec;
      EmotionVector base_vec;
      try {
        sys_vec = system(comment);
        base_vec = baseline(comment);
      } catch (const std::exception&) {
        ++report.n_unjudgeable;
        continue;
      }
      ++report.n_judged;

      for (int e = 0; e < kEmotionCount; ++e) {
        sys_mass[e] += std::abs(sys_vec.scores[e]);
        base_mass[e] += std::abs(base_vec.scores[e]);
      }
      truth_mass[static_cast<int>(*truth.dominant)] += 1.0;

      const double truth_sign = *truth.polarity == Polarity::Positive ? 1.0 : -1.0;
      const auto bucket = [&](ScorerEval& ev, const EmotionVector& vec) {
        const double err = std::abs(sign_of(vec.total_polarity) - truth_sign) / 2.0;
        if (err < kGradientBoundary) {
          ++ev.n_below;
        } else {
          ++ev.n_above;
        }
      };
      bucket(report.system, sys_vec);
      bucket(report.baseline, base_vec);
    }

    const auto truth_prop = normalized(truth_mass);
    report.system.per_sample_error.push_back(l1_distance(normalized(sys_mass), truth_prop));
    report.baseline.per_sample_error.push_back(
        l1_distance(normalized(base_mass), truth_prop));
  }

  report.unjudgeable_rate =
      report.n_comments == 0
          ? 0.0
          : static_cast<double>(report.n_unjudgeable) / report.n_comments;
  return report;
}

Scorer make_uniform_baseline() {
  return [](const EvalComment&) {
    EmotionVector vec;
    for (int e = 0; e < kEmotionCount; ++e) vec.scores[e] = 1.0;
    return vec;
  };
}

Scorer make_lexicon_baseline(const Lexicon& lex, const FunctionWordTables& fw) {
  return [lex, fw](const EvalComment& comment) {
    return score_emotions(comment.tokens, lex, fw);
  };
}

Scorer make_truth_scorer(const std::map<std::string, TruthLabel>& truth) {
  return [truth](const EvalComment& comment) {
    const auto it = truth.find(comment.id);
    if (it == truth.end() || it->second.unjudgeable || !it->second.polarity ||
        !it->second.dominant) {
      throw NotInCorpusError("no judgeable truth for " + comment.id);
    }
    EmotionVector vec;
    vec.scores[static_cast<int>(*it->second.dominant)] = 1.0;
    vec.total_polarity = *it->second.polarity == Polarity::Positive ? 1.0 : -1.0;
    return vec;
  };
}

std::vector<TruthLabel> read_truth_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<TruthLabel> labels;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw ParseError(path.string(), line_no, "invalid JSON record");
    }
    TruthLabel label;
    label.id = j.value("id", "");
    if (label.id.empty()) throw ParseError(path.string(), line_no, "missing id");
    const std::string dominant = j.value("dominant_emotion", "");
    if (dominant == "UNJUDGEABLE") {
      label.unjudgeable = true;
    } else {
      const auto emotion = emotion_from_name(dominant);
      if (!emotion) {
        throw ParseError(path.string(), line_no, "unknown dominant_emotion " + dominant);
      }
      label.dominant = emotion;
      const std::string polarity = j.value("polarity", "");
      if (polarity == "positive") {
        label.polarity = Polarity::Positive;
      } else if (polarity == "negative") {
        label.polarity = Polarity::Negative;
      } else {
        throw ParseError(path.string(), line_no, "polarity must be positive or negative");
      }
    }
    labels.push_back(std::move(label));
  }
  return labels;
}

void write_eval_report_json(const std::filesystem::path& path, const ErrorReport& report) {
  json j;
  j["version"] = "eval-v1";
  j["metrics"] = {
      {"per_sample_error",
       "L1 distance between normalized per-sample emotion-proportion vectors"},
      {"per_comment_error",
       "|sign(total_polarity) - truth_sign| / 2, bucketed at the 0.2 boundary"}};
  j["n_comments"] = report.n_comments;
  j["n_judged"] = report.n_judged;
  j["n_unjudgeable"] = report.n_unjudgeable;
  j["unjudgeable_rate"] = report.unjudgeable_rate;
  j["system"] = scorer_eval_json(report.system);
  j["baseline"] = scorer_eval_json(report.baseline);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

void write_eval_report_text(const std::filesystem::path& path, const ErrorReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "emotion proportion error per sample (L1 distance between normalized\n"
         "emotion-proportion vectors; truth = one-hot dominant emotion)\n\n";
  out << "sample    system  baseline\n";
  for (size_t i = 0; i < report.system.per_sample_error.size(); ++i) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%6zu  %8s  %8s\n", i,
                  fixed6(report.system.per_sample_error[i]).c_str(),
                  fixed6(report.baseline.per_sample_error[i]).c_str());
    out << buf;
  }
  out << "\nper-comment polarity error gradient\n"
         "(error = |sign(total_polarity) - truth_sign| / 2, boundary 0.2)\n\n";
  out << "bucket         system           baseline\n";
  out << "< 0.2          " << pct(report.system.n_below, report.n_comments) << "\t"
      << pct(report.baseline.n_below, report.n_comments) << '\n';
  out << ">= 0.2         " << pct(report.system.n_above, report.n_comments) << "\t"
      << pct(report.baseline.n_above, report.n_comments) << '\n';
  out << "unjudgeable    " << pct(report.n_unjudgeable, report.n_comments) << "\t"
      << pct(report.n_unjudgeable, report.n_comments) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace opinion
