#include "opinion/naive_bayes.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "opinion/errors.hpp"

namespace opinion {

namespace {

using json = nlohmann::json;

constexpr int idx(NbClass c) { return static_cast<int>(c); }

}  // namespace

const char* nb_class_name(NbClass c) {
  return c == NbClass::Positive ? "positive" : "negative";
}

uint64_t NbModel::weight(std::string_view word, NbClass c) const {
  const auto it = weights.find(word);
  return it == weights.end() ? 0 : it->second[idx(c)];
}

NbModel nb_train(const std::vector<LabeledDoc>& labeled, NbOptions options) {
  std::array<uint64_t, 2> doc_count{};
  NbModel model;
  model.options = options;

  for (const auto& [tokens, label] : labeled) {
    ++doc_count[idx(label)];
    if (options.use_term_frequency) {
      for (const auto& token : tokens) ++model.weights[token][idx(label)];
    } else {
      const std::set<std::string> distinct(tokens.begin(), tokens.end());
      for (const auto& token : distinct) ++model.weights[token][idx(label)];
    }
  }
  if (doc_count[0] == 0 || doc_count[1] == 0) {
    throw std::invalid_argument("nb_train: both classes need at least one document");
  }

  const double total_docs = static_cast<double>(doc_count[0] + doc_count[1]);
  for (int c = 0; c < 2; ++c) {
    model.prior[c] = static_cast<double>(doc_count[c]) / total_docs;
  }
  for (const auto& [word, w] : model.weights) {
    model.class_weight_sum[0] += w[0];
    model.class_weight_sum[1] += w[1];
  }
  model.v_total = model.class_weight_sum[0] + model.class_weight_sum[1];
  if (model.v_total == 0) {
    throw std::invalid_argument("nb_train: corpus contains no tokens");
  }
  model.delta = 1.0 / static_cast<double>(model.v_total);
  return model;
}

PolarityResult nb_classify(const NbModel& model, const std::vector<std::string>& tokens) {
  PolarityResult result;
  const double dv = model.delta * static_cast<double>(model.v_total);
  for (int c = 0; c < 2; ++c) result.log_score[c] = std::log(model.prior[c]);

  // Multiplicities in sorted word order keep the summation
  // deterministic; bool weighting collapses each word to one use.
  std::map<std::string, uint64_t, std::less<>> uses;
  for (const auto& token : tokens) ++uses[token];
  for (const auto& [word, n] : uses) {
    const double mult =
        model.options.use_term_frequency ? static_cast<double>(n) : 1.0;
    for (int c = 0; c < 2; ++c) {
      const double num =
          static_cast<double>(model.weight(word, static_cast<NbClass>(c))) + model.delta;
      const double den = static_cast<double>(model.class_weight_sum[c]) + dv;
      result.log_score[c] += mult * std::log(num / den);
    }
  }

  result.label = result.log_score[1] > result.log_score[0] ? NbClass::Negative
                                                           : NbClass::Positive;
  const double other =
      result.log_score[idx(result.label) == 0 ? 1 : 0] - result.log_score[idx(result.label)];
  result.confidence = 1.0 / (1.0 + std::exp(other));
  return result;
}

void NbModel::save(const std::filesystem::path& path) const {
  json j;
  j["version"] = "nb-v1";
  j["priors"] = {{"positive", prior[0]}, {"negative", prior[1]}};
  json vocab = json::object();
  for (const auto& [word, w] : weights) {
    vocab[word] = {{"positive", w[0]}, {"negative", w[1]}};
  }
  j["vocab"] = std::move(vocab);
  j["class_weight_sum"] = {{"positive", class_weight_sum[0]},
                           {"negative", class_weight_sum[1]}};
  j["v"] = v_total;
  j["delta"] = delta;
  j["use_term_frequency"] = options.use_term_frequency;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

NbModel NbModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError(path.string(), 0, "invalid JSON");
  if (!j.is_object() || j.value("version", "") != "nb-v1") {
    throw ParseError(path.string(), 0, "expected model version nb-v1");
  }
  NbModel model;
  try {
    model.prior[0] = j.at("priors").at("positive").get<double>();
    model.prior[1] = j.at("priors").at("negative").get<double>();
    for (const auto& [word, w] : j.at("vocab").items()) {
      model.weights[word] = {w.at("positive").get<uint64_t>(),
                             w.at("negative").get<uint64_t>()};
    }
    model.class_weight_sum[0] = j.at("class_weight_sum").at("positive").get<uint64_t>();
    model.class_weight_sum[1] = j.at("class_weight_sum").at("negative").get<uint64_t>();
    model.v_total = j.at("v").get<uint64_t>();
    model.delta = j.at("delta").get<double>();
    model.options.use_term_frequency = j.value("use_term_frequency", false);
  } catch (const json::exception& e) {
    throw ParseError(path.string(), 0, e.what());
  }

  if (std::abs(model.prior[0] + model.prior[1] - 1.0) > 1e-9) {
    throw ParseError(path.string(), 0, "priors do not sum to 1");
  }
  if (model.class_weight_sum[0] + model.class_weight_sum[1] != model.v_total) {
    throw ParseError(path.string(), 0, "weight sums disagree with total");
  }
  if (model.v_total == 0 ||
      std::abs(model.delta * static_cast<double>(model.v_total) - 1.0) > 1e-9) {
    throw ParseError(path.string(), 0, "delta is not 1/V");
  }
  uint64_t check[2] = {0, 0};
  for (const auto& [word, w] : model.weights) {
    check[0] += w[0];
    check[1] += w[1];
  }
  if (check[0] != model.class_weight_sum[0] || check[1] != model.class_weight_sum[1]) {
    throw ParseError(path.string(), 0, "vocab weights disagree with class sums");
  }
  return model;
}

std::vector<LabeledDoc> read_labeled_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<LabeledDoc> docs;
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
    LabeledDoc doc;
    const std::string label = j.value("label", "");
    if (label == "positive") {
      doc.second = NbClass::Positive;
    } else if (label == "negative") {
      doc.second = NbClass::Negative;
    } else {
      throw ParseError(path.string(), line_no, "label must be positive or negative");
    }
    if (!j.contains("tokens") || !j["tokens"].is_array()) {
      throw ParseError(path.string(), line_no, "missing tokens array");
    }
    for (const auto& t : j["tokens"]) {
      if (!t.is_string()) throw ParseError(path.string(), line_no, "non-string token");
      doc.first.push_back(t.get<std::string>());
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace opinion
