#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "opinion/emotion_scorer.hpp"
#include "opinion/emotions.hpp"
#include "opinion/lexicon.hpp"
#include "opinion/textprep.hpp"

namespace opinion {

struct TrendSeries {
  std::string bucket;  // UTC day, YYYY-MM-DD
  std::array<uint64_t, kEmotionCount> counts{};  // by dominant emotion
  std::array<double, kEmotionCount> mean_scores{};  // mean |score| per doc
  uint64_t n_docs = 0;
  uint64_t n_fallback = 0;
  uint64_t n_lexicon_silent = 0;
};

struct AggregateResult {
  std::vector<TrendSeries> series;  // buckets strictly increasing
  uint64_t skipped = 0;             // records without a usable timestamp
};

// Buckets results by UTC day. Lexicon-silent documents are counted per
// bucket but never assigned a dominant emotion, so per bucket
// sum(counts) + n_lexicon_silent == n_docs. Results are sorted by
// (bucket, id) before accumulation, making the output independent of
// input order.
AggregateResult aggregate(std::vector<DocumentResult> results);

struct HotWord {
  std::string word;
  uint64_t freq = 0;
  double tfidf = 0.0;
  EmotionVector profile;  // signed intensities from the lexicon, zero if absent
};

// Top-k corpus words by smoothed TF-IDF with idf = ln((N+1)/(df+1))+1.
// Stopwords never rank. Ties break by freq then lexicographically.
// Throws std::invalid_argument for k < 1.
std::vector<HotWord> hot_words(const std::vector<std::vector<std::string>>& tokens_by_doc,
                               const Lexicon& lex, const StopwordList& stops, size_t k);

void write_trends_json(const std::filesystem::path& path, const AggregateResult& agg);
void write_trends_csv(const std::filesystem::path& path, const AggregateResult& agg);
void write_hotwords_json(const std::filesystem::path& path,
                         const std::vector<HotWord>& words);
void write_hotwords_csv(const std::filesystem::path& path,
                        const std::vector<HotWord>& words);

}  // namespace opinion
