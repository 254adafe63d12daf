#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "opinion/document.hpp"
#include "opinion/emotions.hpp"
#include "opinion/hmm.hpp"
#include "opinion/lexicon.hpp"
#include "opinion/naive_bayes.hpp"
#include "opinion/textprep.hpp"

namespace opinion {

struct ScorerConfig {
  bool fallback_enabled = true;
  Emotion fallback_positive = Emotion::Hopeful;
  Emotion fallback_negative = Emotion::Depressed;
  // Keep the running weight after a sentiment word instead of
  // resetting it to 1. Off by default: carrying would let one early
  // negation flip every later word in a long comment.
  bool carry_weight = false;
};

// Left-to-right traversal with a running weight W (initially 1).
// Negations flip W, degree adverbs scale it, and a sentiment word adds
// W * sign(polarity) * intensity to each of its emotions, after which
// W resets (see ScorerConfig::carry_weight). An all-zero result is
// flagged LEXICON_SILENT.
EmotionVector score_emotions(const std::vector<std::string>& tokens, const Lexicon& lex,
                             const FunctionWordTables& fw, bool carry_weight = false);

// score_emotions, but when the lexicon stays silent on a non-empty
// token list the polarity classifier decides: its confidence lands on
// the configured fallback emotion, signed by the label, and the result
// is flagged FALLBACK.
EmotionVector score_with_fallback(const std::vector<std::string>& tokens,
                                  const Lexicon& lex, const FunctionWordTables& fw,
                                  const NbModel& nb, const ScorerConfig& cfg);

struct DocumentResult {
  std::string id;
  std::string fetched_at;
  NbClass label = NbClass::Positive;
  double confidence = 0.5;
  EmotionVector emotions;
};

// Full per-document judgment: segment, classify polarity, score
// emotions with fallback.
DocumentResult document_emotion(const Document& doc, const HmmModel& model,
                                const StopwordList& stops, const Lexicon& lex,
                                const FunctionWordTables& fw, const NbModel& nb,
                                const ScorerConfig& cfg);

void write_results_jsonl(const std::filesystem::path& path,
                         const std::vector<DocumentResult>& results);
std::vector<DocumentResult> read_results_jsonl(const std::filesystem::path& path);

}  // namespace opinion
