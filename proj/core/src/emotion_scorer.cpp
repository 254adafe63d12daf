#include "opinion/emotion_scorer.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "opinion/errors.hpp"
#include "opinion/segmenter.hpp"

namespace opinion {

namespace {

using json = nlohmann::json;

}  // namespace

EmotionVector score_emotions(const std::vector<std::string>& tokens, const Lexicon& lex,
                             const FunctionWordTables& fw, bool carry_weight) {
  EmotionVector result;
  double w = 1.0;
  for (const auto& token : tokens) {
    if (const SentimentEntry* entry = lex.find(token)) {
      for (int e = 0; e < kEmotionCount; ++e) {
        if (entry->intensities[e] == 0) continue;
        const double contribution = w * entry->sign() * entry->intensities[e];
        result.scores[e] += contribution;
        result.total_polarity += contribution;
      }
      if (!carry_weight) w = 1.0;
    } else if (fw.is_negation(token)) {
      w = -w;
    } else if (const auto mult = fw.degree_multiplier(token)) {
      w *= *mult;
    }
  }
  if (result.all_zero()) result.flags |= kFlagLexiconSilent;
  return result;
}

EmotionVector score_with_fallback(const std::vector<std::string>& tokens,
                                  const Lexicon& lex, const FunctionWordTables& fw,
                                  const NbModel& nb, const ScorerConfig& cfg) {
  EmotionVector scored = score_emotions(tokens, lex, fw, cfg.carry_weight);
  if (!scored.all_zero() || !cfg.fallback_enabled || tokens.empty()) return scored;

  const PolarityResult polarity = nb_classify(nb, tokens);
  EmotionVector fallback;
  const Emotion target = polarity.label == NbClass::Positive ? cfg.fallback_positive
                                                             : cfg.fallback_negative;
  const double value = polarity.label == NbClass::Positive ? polarity.confidence
                                                           : -polarity.confidence;
  fallback.scores[static_cast<int>(target)] = value;
  fallback.total_polarity = value;
  fallback.flags = kFlagFallback;
  return fallback;
}

DocumentResult document_emotion(const Document& doc, const HmmModel& model,
                                const StopwordList& stops, const Lexicon& lex,
                                const FunctionWordTables& fw, const NbModel& nb,
                                const ScorerConfig& cfg) {
  const std::vector<std::string> tokens = segment_pipeline(doc, model, stops);
  const PolarityResult polarity = nb_classify(nb, tokens);
  DocumentResult result;
  result.id = doc.id;
  result.fetched_at = doc.fetched_at;
  result.label = polarity.label;
  result.confidence = polarity.confidence;
  result.emotions = score_with_fallback(tokens, lex, fw, nb, cfg);
  return result;
}

void write_results_jsonl(const std::filesystem::path& path,
                         const std::vector<DocumentResult>& results) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const auto& r : results) {
    json j;
    j["id"] = r.id;
    j["fetched_at"] = r.fetched_at;
    j["label"] = nb_class_name(r.label);
    j["confidence"] = r.confidence;
    json emotions = json::object();
    for (int e = 0; e < kEmotionCount; ++e) {
      emotions[emotion_name(static_cast<Emotion>(e))] = r.emotions.scores[e];
    }
    j["emotions"] = std::move(emotions);
    j["dominant"] = emotion_name(r.emotions.dominant());
    j["total_polarity"] = r.emotions.total_polarity;
    json flags = json::array();
    if (r.emotions.flags & kFlagFallback) flags.push_back("FALLBACK");
    if (r.emotions.flags & kFlagLexiconSilent) flags.push_back("LEXICON_SILENT");
    j["flags"] = std::move(flags);
    out << j.dump() << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<DocumentResult> read_results_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<DocumentResult> results;
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
    DocumentResult r;
    try {
      r.id = j.at("id").get<std::string>();
      r.fetched_at = j.value("fetched_at", "");
      const std::string label = j.at("label").get<std::string>();
      if (label != "positive" && label != "negative") {
        throw ParseError(path.string(), line_no, "bad label " + label);
      }
      r.label = label == "positive" ? NbClass::Positive : NbClass::Negative;
      r.confidence = j.at("confidence").get<double>();
      for (const auto& [name, value] : j.at("emotions").items()) {
        const auto emotion = emotion_from_name(name);
        if (!emotion) throw ParseError(path.string(), line_no, "unknown emotion " + name);
        r.emotions.scores[static_cast<int>(*emotion)] = value.get<double>();
      }
      r.emotions.total_polarity = j.value("total_polarity", 0.0);
      for (const auto& flag : j.value("flags", json::array())) {
        if (flag == "FALLBACK") {
          r.emotions.flags |= kFlagFallback;
        } else if (flag == "LEXICON_SILENT") {
          r.emotions.flags |= kFlagLexiconSilent;
        } else {
          throw ParseError(path.string(), line_no, "unknown flag");
        }
      }
    } catch (const json::exception& e) {
      throw ParseError(path.string(), line_no, e.what());
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace opinion
