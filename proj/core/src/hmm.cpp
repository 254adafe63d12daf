#include "opinion/hmm.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "opinion/errors.hpp"
#include "opinion/utf8.hpp"

namespace opinion {

namespace {

using json = nlohmann::json;

constexpr double kEmissionLambda = 1e-6;

constexpr int idx(HmmState s) { return static_cast<int>(s); }

constexpr std::array<const char*, kHmmStateCount> kStateNames = {"B", "E", "M", "S"};

json logp_to_json(double v) {
  if (v == kLogZero) return nullptr;
  return v;
}

double logp_from_json(const json& j, const std::filesystem::path& path) {
  if (j.is_null()) return kLogZero;
  if (!j.is_number()) throw ParseError(path.string(), 0, "expected number or null");
  return j.get<double>();
}

void check_prob_row(const std::array<double, kHmmStateCount>& row,
                    const std::filesystem::path& path, const char* what) {
  double sum = 0.0;
  for (double v : row) {
    if (v > 0.0) throw ParseError(path.string(), 0, std::string(what) + ": log-prob above 0");
    if (v != kLogZero) sum += std::exp(v);
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ParseError(path.string(), 0, std::string(what) + ": probabilities do not sum to 1");
  }
}

}  // namespace

const char* hmm_state_name(HmmState s) { return kStateNames[idx(s)]; }

bool transition_allowed(HmmState from, HmmState to) {
  switch (from) {
    case HmmState::B:
    case HmmState::M:
      return to == HmmState::E || to == HmmState::M;
    case HmmState::E:
    case HmmState::S:
      return to == HmmState::B || to == HmmState::S;
  }
  return false;
}

double HmmModel::emission_log_prob(HmmState s, char32_t cp) const {
  const auto it = emission.find(cp);
  if (it == emission.end()) return unk_emission[idx(s)];
  return it->second[idx(s)];
}

void HmmModel::save(const std::filesystem::path& path) const {
  json j;
  j["version"] = "hmm-v1";
  j["states"] = {"B", "E", "M", "S"};
  json init = json::array();
  for (double v : initial) init.push_back(logp_to_json(v));
  j["initial"] = std::move(init);
  json trans = json::array();
  for (const auto& row : transition) {
    json jrow = json::array();
    for (double v : row) jrow.push_back(logp_to_json(v));
    trans.push_back(std::move(jrow));
  }
  j["transition"] = std::move(trans);
  json emit = json::object();
  for (const auto& [cp, probs] : emission) {
    json jrow = json::array();
    for (double v : probs) jrow.push_back(logp_to_json(v));
    emit[utf8_encode(cp)] = std::move(jrow);
  }
  j["emission"] = std::move(emit);
  json unk = json::array();
  for (double v : unk_emission) unk.push_back(logp_to_json(v));
  j["unk_emission"] = std::move(unk);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

HmmModel HmmModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError(path.string(), 0, "invalid JSON");
  if (!j.is_object() || j.value("version", "") != "hmm-v1") {
    throw ParseError(path.string(), 0, "expected model version hmm-v1");
  }
  const json states = j.value("states", json::array());
  if (states != json({"B", "E", "M", "S"})) {
    throw ParseError(path.string(), 0, "unexpected state order");
  }

  HmmModel model;
  const json& init = j.at("initial");
  const json& trans = j.at("transition");
  const json& unk = j.at("unk_emission");
  if (init.size() != kHmmStateCount || trans.size() != kHmmStateCount ||
      unk.size() != kHmmStateCount) {
    throw ParseError(path.string(), 0, "malformed probability tables");
  }
  for (int s = 0; s < kHmmStateCount; ++s) {
    model.initial[s] = logp_from_json(init[s], path);
    model.unk_emission[s] = logp_from_json(unk[s], path);
    const json& row = trans[s];
    if (row.size() != kHmmStateCount) {
      throw ParseError(path.string(), 0, "malformed transition row");
    }
    for (int t = 0; t < kHmmStateCount; ++t) {
      model.transition[s][t] = logp_from_json(row[t], path);
      if (!transition_allowed(static_cast<HmmState>(s), static_cast<HmmState>(t)) &&
          model.transition[s][t] != kLogZero) {
        throw ParseError(path.string(), 0, "finite probability on a forbidden transition");
      }
    }
  }
  check_prob_row(model.initial, path, "initial");
  for (int s = 0; s < kHmmStateCount; ++s) {
    check_prob_row(model.transition[s], path, "transition");
  }

  for (const auto& [key, value] : j.at("emission").items()) {
    const auto cps = utf8_codepoints(key);
    if (cps.size() != 1) {
      throw ParseError(path.string(), 0, "emission key is not a single character");
    }
    if (!value.is_array() || value.size() != kHmmStateCount) {
      throw ParseError(path.string(), 0, "malformed emission row");
    }
    std::array<double, kHmmStateCount> probs{};
    for (int s = 0; s < kHmmStateCount; ++s) probs[s] = logp_from_json(value[s], path);
    model.emission[cps[0]] = probs;
  }
  return model;
}

std::vector<std::vector<std::string>> read_segmented_corpus(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus " + path.string());
  std::vector<std::vector<std::string>> corpus;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    first = false;
    if (!line.empty() && line[0] == '#') continue;
    std::vector<std::string> sentence;
    size_t pos = 0;
    while (pos < line.size()) {
      const size_t space = line.find(' ', pos);
      const size_t end = (space == std::string::npos) ? line.size() : space;
      if (end > pos) sentence.push_back(line.substr(pos, end - pos));
      pos = end + 1;
    }
    if (!sentence.empty()) corpus.push_back(std::move(sentence));
  }
  return corpus;
}

std::vector<HmmState> word_tags(size_t n_chars) {
  if (n_chars == 0) return {};
  if (n_chars == 1) return {HmmState::S};
  std::vector<HmmState> tags(n_chars, HmmState::M);
  tags.front() = HmmState::B;
  tags.back() = HmmState::E;
  return tags;
}

HmmModel hmm_train(const std::vector<std::vector<std::string>>& corpus) {
  std::array<uint64_t, kHmmStateCount> init_count{};
  std::array<std::array<uint64_t, kHmmStateCount>, kHmmStateCount> trans_count{};
  std::array<std::map<char32_t, uint64_t>, kHmmStateCount> emit_count;
  std::array<uint64_t, kHmmStateCount> state_total{};
  std::set<char32_t> vocab;

  bool any = false;
  for (const auto& sentence : corpus) {
    std::vector<HmmState> tags;
    std::vector<char32_t> chars;
    for (const auto& word : sentence) {
      const auto cps = utf8_codepoints(word);
      if (cps.empty()) continue;
      const auto wt = word_tags(cps.size());
      tags.insert(tags.end(), wt.begin(), wt.end());
      chars.insert(chars.end(), cps.begin(), cps.end());
    }
    if (tags.empty()) continue;
    any = true;
    ++init_count[idx(tags.front())];
    for (size_t t = 0; t < tags.size(); ++t) {
      const int s = idx(tags[t]);
      ++emit_count[s][chars[t]];
      ++state_total[s];
      vocab.insert(chars[t]);
      if (t > 0) ++trans_count[idx(tags[t - 1])][s];
    }
  }
  if (!any) throw std::invalid_argument("hmm_train: empty corpus");

  HmmModel model;

  uint64_t init_total = 0;
  for (uint64_t c : init_count) init_total += c;
  for (int s = 0; s < kHmmStateCount; ++s) {
    model.initial[s] = init_count[s] > 0
                           ? std::log(static_cast<double>(init_count[s]) / init_total)
                           : kLogZero;
  }

  for (int s = 0; s < kHmmStateCount; ++s) {
    uint64_t row_total = 0;
    int n_allowed = 0;
    for (int t = 0; t < kHmmStateCount; ++t) {
      if (transition_allowed(static_cast<HmmState>(s), static_cast<HmmState>(t))) {
        row_total += trans_count[s][t];
        ++n_allowed;
      }
    }
    for (int t = 0; t < kHmmStateCount; ++t) {
      if (!transition_allowed(static_cast<HmmState>(s), static_cast<HmmState>(t))) {
        model.transition[s][t] = kLogZero;
      } else if (row_total == 0) {
        // State never observed as a predecessor: fall back to uniform
        // over its allowed successors so the row stays a distribution.
        model.transition[s][t] = std::log(1.0 / n_allowed);
      } else if (trans_count[s][t] == 0) {
        model.transition[s][t] = kLogZero;
      } else {
        model.transition[s][t] =
            std::log(static_cast<double>(trans_count[s][t]) / row_total);
      }
    }
  }

  const double v = static_cast<double>(vocab.size());
  for (const char32_t cp : vocab) {
    std::array<double, kHmmStateCount>& probs = model.emission[cp];
    for (int s = 0; s < kHmmStateCount; ++s) {
      if (state_total[s] == 0) {
        probs[s] = std::log(1.0 / v);
        continue;
      }
      const auto it = emit_count[s].find(cp);
      const double freq =
          it == emit_count[s].end()
              ? 0.0
              : static_cast<double>(it->second) / static_cast<double>(state_total[s]);
      probs[s] = std::log((freq + kEmissionLambda) / (1.0 + kEmissionLambda * v));
    }
  }

  for (int s = 0; s < kHmmStateCount; ++s) {
    uint64_t singletons = 0;
    for (const auto& [cp, count] : emit_count[s]) {
      if (count == 1) ++singletons;
    }
    model.unk_emission[s] =
        std::log(static_cast<double>(singletons + 1) /
                 (static_cast<double>(state_total[s] + 1) * (v + 1.0)));
  }

  return model;
}

}  // namespace opinion
