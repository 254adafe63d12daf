#include "opinion/trends.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "opinion/errors.hpp"
#include "opinion/timeutil.hpp"

namespace opinion {

namespace {

using json = nlohmann::json;

std::string csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

AggregateResult aggregate(std::vector<DocumentResult> results) {
  AggregateResult agg;

  std::vector<std::pair<std::string, const DocumentResult*>> keyed;
  keyed.reserve(results.size());
  for (const auto& r : results) {
    const auto day = utc_day(r.fetched_at);
    if (!day) {
      ++agg.skipped;
      continue;
    }
    keyed.emplace_back(*day, &r);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return a.second->id < b.second->id;
            });

  TrendSeries* current = nullptr;
  for (const auto& [day, r] : keyed) {
    if (current == nullptr || current->bucket != day) {
      agg.series.emplace_back();
      current = &agg.series.back();
      current->bucket = day;
    }
    ++current->n_docs;
    if (r->emotions.flags & kFlagLexiconSilent) {
      ++current->n_lexicon_silent;
    } else {
      ++current->counts[static_cast<int>(r->emotions.dominant())];
    }
    if (r->emotions.flags & kFlagFallback) ++current->n_fallback;
    for (int e = 0; e < kEmotionCount; ++e) {
      current->mean_scores[e] += std::abs(r->emotions.scores[e]);
    }
  }
  for (auto& series : agg.series) {
    for (int e = 0; e < kEmotionCount; ++e) {
      series.mean_scores[e] /= static_cast<double>(series.n_docs);
    }
  }
  return agg;
}

std::vector<HotWord> hot_words(const std::vector<std::vector<std::string>>& tokens_by_doc,
                               const Lexicon& lex, const StopwordList& stops, size_t k) {
  if (k < 1) throw std::invalid_argument("hot_words: k must be >= 1");

  std::map<std::string, uint64_t> tf;
  std::map<std::string, uint64_t> df;
  for (const auto& tokens : tokens_by_doc) {
    std::map<std::string, uint64_t> in_doc;
    for (const auto& token : tokens) {
      if (stops.contains(token)) continue;
      ++tf[token];
      ++in_doc[token];
    }
    for (const auto& [word, n] : in_doc) ++df[word];
  }

  const double n_docs = static_cast<double>(tokens_by_doc.size());
  std::vector<HotWord> words;
  words.reserve(tf.size());
  for (const auto& [word, freq] : tf) {
    HotWord hw;
    hw.word = word;
    hw.freq = freq;
    const double idf =
        std::log((n_docs + 1.0) / (static_cast<double>(df[word]) + 1.0)) + 1.0;
    hw.tfidf = static_cast<double>(freq) * idf;
    if (const SentimentEntry* entry = lex.find(word)) {
      for (int e = 0; e < kEmotionCount; ++e) {
        if (entry->intensities[e] == 0) continue;
        const double value = entry->sign() * entry->intensities[e];
        hw.profile.scores[e] = value;
        hw.profile.total_polarity += value;
      }
    }
    words.push_back(std::move(hw));
  }

  std::sort(words.begin(), words.end(), [](const HotWord& a, const HotWord& b) {
    if (a.tfidf != b.tfidf) return a.tfidf > b.tfidf;
    if (a.freq != b.freq) return a.freq > b.freq;
    return a.word < b.word;
  });
  if (words.size() > k) words.resize(k);
  return words;
}

void write_trends_json(const std::filesystem::path& path, const AggregateResult& agg) {
  json j;
  j["version"] = "trends-v1";
  j["skipped"] = agg.skipped;
  json series = json::array();
  for (const auto& s : agg.series) {
    json row;
    row["bucket"] = s.bucket;
    json counts = json::object();
    json means = json::object();
    for (int e = 0; e < kEmotionCount; ++e) {
      counts[emotion_name(static_cast<Emotion>(e))] = s.counts[e];
      means[emotion_name(static_cast<Emotion>(e))] = s.mean_scores[e];
    }
    row["counts"] = std::move(counts);
    row["mean_scores"] = std::move(means);
    row["n_docs"] = s.n_docs;
    row["n_fallback"] = s.n_fallback;
    row["n_lexicon_silent"] = s.n_lexicon_silent;
    series.push_back(std::move(row));
  }
  j["series"] = std::move(series);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

void write_trends_csv(const std::filesystem::path& path, const AggregateResult& agg) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "bucket,n_docs,n_fallback,n_lexicon_silent";
  for (int e = 0; e < kEmotionCount; ++e) {
    out << ",count_" << emotion_name(static_cast<Emotion>(e));
  }
  for (int e = 0; e < kEmotionCount; ++e) {
    out << ",mean_" << emotion_name(static_cast<Emotion>(e));
  }
  out << '\n';
  for (const auto& s : agg.series) {
    out << s.bucket << ',' << s.n_docs << ',' << s.n_fallback << ','
        << s.n_lexicon_silent;
    for (int e = 0; e < kEmotionCount; ++e) out << ',' << s.counts[e];
    for (int e = 0; e < kEmotionCount; ++e) out << ',' << csv_double(s.mean_scores[e]);
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

void write_hotwords_json(const std::filesystem::path& path,
                         const std::vector<HotWord>& words) {
  json j;
  j["version"] = "hotwords-v1";
  json rows = json::array();
  for (const auto& w : words) {
    json row;
    row["word"] = w.word;
    row["freq"] = w.freq;
    row["tfidf"] = w.tfidf;
    json emotions = json::object();
    for (int e = 0; e < kEmotionCount; ++e) {
      emotions[emotion_name(static_cast<Emotion>(e))] = w.profile.scores[e];
    }
    row["emotions"] = std::move(emotions);
    rows.push_back(std::move(row));
  }
  j["words"] = std::move(rows);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

void write_hotwords_csv(const std::filesystem::path& path,
                        const std::vector<HotWord>& words) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << "word,freq,tfidf";
  for (int e = 0; e < kEmotionCount; ++e) {
    out << ',' << emotion_name(static_cast<Emotion>(e));
  }
  out << '\n';
  for (const auto& w : words) {
    out << w.word << ',' << w.freq << ',' << csv_double(w.tfidf);
    for (int e = 0; e < kEmotionCount; ++e) out << ',' << csv_double(w.profile.scores[e]);
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace opinion
