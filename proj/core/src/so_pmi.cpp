#include "opinion/so_pmi.hpp"

#include <cmath>
#include <stdexcept>

#include "opinion/errors.hpp"

namespace opinion {

double pmi(const CooccurrenceStats& stats, std::string_view a, std::string_view b,
           bool smoothed) {
  const double joint =
      static_cast<double>(stats.pair(a, b)) + (smoothed ? 1.0 : 0.0);
  double na = static_cast<double>(stats.count(a));
  double nb = static_cast<double>(stats.count(b));
  if (smoothed) {
    na = std::max(na, 1.0);
    nb = std::max(nb, 1.0);
  }
  return std::log2(joint * static_cast<double>(stats.total_tokens) / (na * nb));
}

double so_pmi(const CooccurrenceStats& stats, std::string_view word,
              const std::set<std::string>& pos_seeds,
              const std::set<std::string>& neg_seeds, bool smoothed) {
  if (pos_seeds.empty() || neg_seeds.empty()) {
    throw std::invalid_argument("so_pmi: seed sets must be non-empty");
  }
  if (stats.count(word) == 0) {
    throw NotInCorpusError("word not observed in corpus: " + std::string(word));
  }
  double sum_pos = 0.0;
  for (const auto& seed : pos_seeds) sum_pos += pmi(stats, word, seed, smoothed);
  double sum_neg = 0.0;
  for (const auto& seed : neg_seeds) sum_neg += pmi(stats, word, seed, smoothed);
  return sum_pos - sum_neg;
}

Lexicon expand_lexicon(const Lexicon& lex, const CooccurrenceStats& stats,
                       const std::set<std::string>& candidates,
                       const std::set<std::string>& pos_seeds,
                       const std::set<std::string>& neg_seeds, double threshold) {
  if (!(threshold > 0.0)) {
    throw std::invalid_argument("expand_lexicon: threshold must be > 0");
  }
  Lexicon out = lex;
  for (const auto& word : candidates) {
    if (out.contains(word) || stats.count(word) == 0) continue;
    const double score = so_pmi(stats, word, pos_seeds, neg_seeds);
    if (score < threshold && score > -threshold) continue;
    SentimentEntry entry;
    entry.word = word;
    entry.source = EntrySource::SoPmi;
    if (score >= threshold) {
      entry.polarity = Polarity::Positive;
      entry.intensities[static_cast<int>(Emotion::Hopeful)] = 5;
    } else {
      entry.polarity = Polarity::Negative;
      entry.intensities[static_cast<int>(Emotion::Depressed)] = 5;
    }
    out.upsert(std::move(entry));
  }
  return out;
}

}  // namespace opinion
