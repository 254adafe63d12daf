#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "opinion/errors.hpp"
#include "opinion/eval.hpp"
#include "opinion/trends.hpp"
#include "test_util.hpp"

using namespace opinion;

namespace {

int eidx(Emotion e) { return static_cast<int>(e); }

DocumentResult make_result(std::string id, std::string ts, Emotion dominant, double score,
                           uint32_t flags = kFlagNone) {
  DocumentResult r;
  r.id = std::move(id);
  r.fetched_at = std::move(ts);
  r.label = score >= 0 ? NbClass::Positive : NbClass::Negative;
  r.confidence = 0.8;
  r.emotions.scores[eidx(dominant)] = score;
  r.emotions.total_polarity = score;
  r.emotions.flags = flags;
  return r;
}

DocumentResult silent_result(std::string id, std::string ts) {
  DocumentResult r;
  r.id = std::move(id);
  r.fetched_at = std::move(ts);
  r.label = NbClass::Positive;
  r.confidence = 0.5;
  r.emotions.flags = kFlagLexiconSilent;
  return r;
}

}  // namespace

TEST_CASE("aggregation buckets by utc day with hand-checked means") {
  std::vector<DocumentResult> results;
  results.push_back(make_result("a", "2020-02-01T08:00:00Z", Emotion::Happy, 7.0));
  results.push_back(make_result("b", "2020-02-01T12:00:00Z", Emotion::Happy, -3.0));
  results.push_back(make_result("c", "2020-02-01T23:59:59Z", Emotion::Angry, -9.0));
  results.push_back(make_result("d", "2020-02-02T00:00:00Z", Emotion::Hopeful, 5.0));

  const AggregateResult agg = aggregate(results);
  CHECK(agg.skipped == 0);
  REQUIRE(agg.series.size() == 2);

  const TrendSeries& day1 = agg.series[0];
  CHECK(day1.bucket == "2020-02-01");
  CHECK(day1.n_docs == 3);
  CHECK(day1.counts[eidx(Emotion::Happy)] == 2);
  CHECK(day1.counts[eidx(Emotion::Angry)] == 1);
  // mean |score| over all docs in the bucket: (7+3)/3 and 9/3
  CHECK(day1.mean_scores[eidx(Emotion::Happy)] == doctest::Approx(10.0 / 3.0));
  CHECK(day1.mean_scores[eidx(Emotion::Angry)] == doctest::Approx(3.0));
  CHECK(day1.mean_scores[eidx(Emotion::Hopeful)] == 0.0);

  CHECK(agg.series[1].bucket == "2020-02-02");
  CHECK(agg.series[1].n_docs == 1);
}

TEST_CASE("silent and fallback documents are tallied separately") {
  std::vector<DocumentResult> results;
  results.push_back(make_result("a", "2020-02-01T08:00:00Z", Emotion::Happy, 7.0));
  results.push_back(
      make_result("b", "2020-02-01T09:00:00Z", Emotion::Hopeful, 0.7, kFlagFallback));
  results.push_back(silent_result("c", "2020-02-01T10:00:00Z"));

  const AggregateResult agg = aggregate(results);
  REQUIRE(agg.series.size() == 1);
  const TrendSeries& day = agg.series[0];
  CHECK(day.n_docs == 3);
  CHECK(day.n_fallback == 1);
  CHECK(day.n_lexicon_silent == 1);
  // the fallback doc still gets a dominant emotion; the silent one does not
  CHECK(day.counts[eidx(Emotion::Happy)] == 1);
  CHECK(day.counts[eidx(Emotion::Hopeful)] == 1);
  uint64_t count_sum = 0;
  for (int e = 0; e < kEmotionCount; ++e) count_sum += day.counts[e];
  CHECK(count_sum + day.n_lexicon_silent == day.n_docs);
}

TEST_CASE("records without usable timestamps are skipped and counted") {
  std::vector<DocumentResult> results;
  results.push_back(make_result("a", "2020-02-01T08:00:00Z", Emotion::Happy, 1.0));
  results.push_back(make_result("b", "not-a-date", Emotion::Happy, 1.0));
  results.push_back(make_result("c", "", Emotion::Happy, 1.0));
  const AggregateResult agg = aggregate(results);
  CHECK(agg.skipped == 2);
  REQUIRE(agg.series.size() == 1);
  CHECK(agg.series[0].n_docs == 1);
}

TEST_CASE("aggregation is independent of input order") {
  std::vector<DocumentResult> results;
  for (int i = 0; i < 40; ++i) {
    const std::string day = i % 3 == 0 ? "2020-02-01" : (i % 3 == 1 ? "2020-02-02" : "2020-02-03");
    results.push_back(make_result("id" + std::to_string(i), day + "T10:00:00Z",
                                  static_cast<Emotion>(i % kEmotionCount),
                                  (i % 2 ? 1.0 : -1.0) * (i % 9 + 0.25)));
  }
  const AggregateResult a = aggregate(results);
  std::mt19937 rng(4);
  std::shuffle(results.begin(), results.end(), rng);
  const AggregateResult b = aggregate(results);

  REQUIRE(a.series.size() == b.series.size());
  for (size_t i = 0; i < a.series.size(); ++i) {
    CHECK(a.series[i].bucket == b.series[i].bucket);
    CHECK(a.series[i].counts == b.series[i].counts);
    CHECK(a.series[i].n_docs == b.series[i].n_docs);
    for (int e = 0; e < kEmotionCount; ++e) {
      CHECK(a.series[i].mean_scores[e] == b.series[i].mean_scores[e]);
    }
  }
}

TEST_CASE("per-bucket counts always conserve the document total") {
  std::mt19937 rng(2020);
  std::uniform_int_distribution<int> day(1, 5);
  std::uniform_int_distribution<int> emo(0, kEmotionCount - 1);
  std::uniform_int_distribution<int> kind(0, 5);
  for (int round = 0; round < 50; ++round) {
    std::vector<DocumentResult> results;
    const int n = 1 + round * 3 % 70;
    for (int i = 0; i < n; ++i) {
      const std::string id = "r" + std::to_string(i);
      char ts[32];
      std::snprintf(ts, sizeof(ts), "2020-02-%02dT06:00:00Z", day(rng));
      switch (kind(rng)) {
        case 0:
          results.push_back(silent_result(id, ts));
          break;
        case 1:
          results.push_back(make_result(id, "garbage", static_cast<Emotion>(emo(rng)), 1.0));
          break;
        case 2:
          results.push_back(make_result(id, ts, static_cast<Emotion>(emo(rng)), -2.5,
                                        kFlagFallback));
          break;
        default:
          results.push_back(make_result(id, ts, static_cast<Emotion>(emo(rng)), 3.25));
      }
    }
    const AggregateResult agg = aggregate(results);
    uint64_t seen = agg.skipped;
    for (const auto& s : agg.series) {
      uint64_t count_sum = 0;
      for (int e = 0; e < kEmotionCount; ++e) count_sum += s.counts[e];
      CHECK(count_sum + s.n_lexicon_silent == s.n_docs);
      seen += s.n_docs;
    }
    CHECK(seen == results.size());
    // buckets strictly increasing
    for (size_t i = 1; i < agg.series.size(); ++i) {
      CHECK(agg.series[i - 1].bucket < agg.series[i].bucket);
    }
  }
}

TEST_CASE("trend writers emit json and csv") {
  std::vector<DocumentResult> results;
  results.push_back(make_result("a", "2020-02-01T08:00:00Z", Emotion::Happy, 7.0));
  results.push_back(make_result("b", "bad-ts", Emotion::Happy, 7.0));
  const AggregateResult agg = aggregate(results);

  testutil::TempDir tmp("trends-io");
  write_trends_json(tmp / "t.json", agg);
  write_trends_csv(tmp / "t.csv", agg);
  const std::string j = testutil::read_file(tmp / "t.json");
  CHECK(j.find("trends-v1") != std::string::npos);
  CHECK(j.find("2020-02-01") != std::string::npos);
  CHECK(j.find("\"skipped\": 1") != std::string::npos);
  const std::string c = testutil::read_file(tmp / "t.csv");
  CHECK(c.find("bucket,n_docs") == 0);
  CHECK(c.find("2020-02-01") != std::string::npos);
  // header plus one row
  CHECK(std::count(c.begin(), c.end(), '\n') == 2);
}

TEST_CASE("hot words rank by tf-idf with hand-checked scores") {
  const std::vector<std::vector<std::string>> docs = {
      {"苹果", "苹果", "香蕉"}, {"苹果", "梨"}, {"香蕉", "梨"}};
  Lexicon lex;
  StopwordList stops;
  const auto words = hot_words(docs, lex, stops, 10);
  REQUIRE(words.size() == 3);
  CHECK(words[0].word == "苹果");
  CHECK(words[0].freq == 3);
  CHECK(words[0].tfidf == doctest::Approx(3.0 * (std::log(4.0 / 3.0) + 1.0)));
  // 香蕉 and 梨 tie on tf-idf and frequency; the lexicographically
  // smaller byte sequence comes first
  CHECK(words[1].word == "梨");
  CHECK(words[2].word == "香蕉");
  CHECK(words[1].tfidf == words[2].tfidf);
}

TEST_CASE("a word present in every document has idf exactly one") {
  const std::vector<std::vector<std::string>> docs = {{"词", "a"}, {"词"}, {"词", "b"}};
  const auto words = hot_words(docs, Lexicon{}, StopwordList{}, 1);
  REQUIRE(words.size() == 1);
  CHECK(words[0].word == "词");
  CHECK(words[0].tfidf == 3.0);  // tf * (ln(1) + 1)
}

TEST_CASE("stopwords never rank and k caps the output") {
  StopwordList stops;
  stops.words = {"的"};
  const std::vector<std::vector<std::string>> docs = {{"的", "的", "好"}, {"的", "坏"}};
  auto words = hot_words(docs, Lexicon{}, stops, 10);
  REQUIRE(words.size() == 2);
  for (const auto& w : words) CHECK(w.word != "的");
  words = hot_words(docs, Lexicon{}, stops, 1);
  CHECK(words.size() == 1);
  CHECK_THROWS_AS(hot_words(docs, Lexicon{}, stops, 0), std::invalid_argument);
}

TEST_CASE("hot words carry signed lexicon profiles") {
  const Lexicon lex = Lexicon::load_merge({testutil::data_dir() / "lexicon_base.tsv"});
  const std::vector<std::vector<std::string>> docs = {{"高兴", "害怕"}, {"高兴"}};
  const auto words = hot_words(docs, lex, StopwordList{}, 5);
  REQUIRE(words.size() == 2);
  CHECK(words[0].word == "高兴");
  CHECK(words[0].profile.scores[eidx(Emotion::Happy)] == 7.0);
  CHECK(words[1].word == "害怕");
  CHECK(words[1].profile.scores[eidx(Emotion::Frightened)] == -7.0);

  testutil::TempDir tmp("hot-io");
  write_hotwords_json(tmp / "h.json", words);
  write_hotwords_csv(tmp / "h.csv", words);
  CHECK(testutil::read_file(tmp / "h.json").find("hotwords-v1") != std::string::npos);
  CHECK(testutil::read_file(tmp / "h.csv").find("word,freq,tfidf") == 0);
}

TEST_CASE("sample partition deals sorted comments round robin") {
  std::vector<EvalComment> comments;
  for (const char* id : {"e", "c", "a", "d", "b"}) comments.push_back({id, {}});
  const auto partition = SamplePartition::build(comments, {}, 2);
  REQUIRE(partition.samples.size() == 2);
  REQUIRE(partition.samples[0].size() == 3);
  CHECK(partition.samples[0][0].id == "a");
  CHECK(partition.samples[0][1].id == "c");
  CHECK(partition.samples[0][2].id == "e");
  CHECK(partition.samples[1][0].id == "b");
  CHECK(partition.samples[1][1].id == "d");
  CHECK_THROWS_AS(SamplePartition::build(comments, {}, 0), std::invalid_argument);
}

namespace {

SamplePartition happy_partition(int n_comments, int n_samples) {
  std::vector<EvalComment> comments;
  std::vector<TruthLabel> labels;
  for (int i = 0; i < n_comments; ++i) {
    const std::string id = "c" + std::to_string(100 + i);
    comments.push_back({id, {"token"}});
    TruthLabel t;
    t.id = id;
    t.polarity = i % 3 == 0 ? Polarity::Negative : Polarity::Positive;
    t.dominant = Emotion::Happy;
    labels.push_back(t);
  }
  return SamplePartition::build(comments, labels, n_samples);
}

}  // namespace

TEST_CASE("self comparison scores zero error everywhere") {
  const auto partition = happy_partition(24, 4);
  const Scorer truth = make_truth_scorer(partition.truth);
  const ErrorReport report = run_comparison(partition, truth, truth);

  CHECK(report.n_comments == 24);
  CHECK(report.n_judged == 24);
  CHECK(report.n_unjudgeable == 0);
  CHECK(report.unjudgeable_rate == 0.0);
  REQUIRE(report.system.per_sample_error.size() == 4);
  for (double err : report.system.per_sample_error) CHECK(err == 0.0);
  CHECK(report.system.n_below == 24);
  CHECK(report.system.n_above == 0);
}

TEST_CASE("uniform baseline against one-hot truth gives the closed-form error") {
  const auto partition = happy_partition(16, 2);
  const Scorer truth = make_truth_scorer(partition.truth);
  const ErrorReport report = run_comparison(partition, truth, make_uniform_baseline());

  // baseline proportions are 1/7 everywhere; truth is one-hot:
  // L1 = (1 - 1/7) + 6 * 1/7 = 12/7
  for (double err : report.baseline.per_sample_error) {
    CHECK(err == doctest::Approx(12.0 / 7.0).epsilon(1e-12));
  }
  // zero polarity against ±1 truth is error 0.5, at or above the boundary
  CHECK(report.baseline.n_above == 16);
  CHECK(report.baseline.n_below == 0);
  // the system (truth replay) stays perfect
  for (double err : report.system.per_sample_error) CHECK(err == 0.0);
}

TEST_CASE("missing or unjudgeable truth and throwing scorers disqualify comments") {
  std::vector<EvalComment> comments = {{"a", {"x"}}, {"b", {"x"}}, {"c", {"x"}},
                                       {"d", {"x"}}};
  std::vector<TruthLabel> labels;
  TruthLabel ok;
  ok.id = "a";
  ok.polarity = Polarity::Positive;
  ok.dominant = Emotion::Happy;
  labels.push_back(ok);
  TruthLabel unjudgeable;
  unjudgeable.id = "b";
  unjudgeable.unjudgeable = true;
  labels.push_back(unjudgeable);
  ok.id = "d";
  labels.push_back(ok);
  // "c" has no truth row at all

  const auto partition = SamplePartition::build(comments, labels, 1);
  const Scorer truth = make_truth_scorer(partition.truth);
  const Scorer throwing = [](const EvalComment& c) -> EmotionVector {
    if (c.id == "d") throw std::runtime_error("no result for this comment");
    EmotionVector v;
    v.scores[eidx(Emotion::Happy)] = 1.0;
    v.total_polarity = 1.0;
    return v;
  };
  const ErrorReport report = run_comparison(partition, throwing, truth);
  CHECK(report.n_comments == 4);
  CHECK(report.n_judged == 1);        // only "a" survives
  CHECK(report.n_unjudgeable == 3);   // "b" unjudgeable, "c" unlabeled, "d" threw
  CHECK(report.unjudgeable_rate == 0.75);
  CHECK(report.system.n_below + report.system.n_above == 1);
}

TEST_CASE("lexicon baseline scores through the dictionaries") {
  const Lexicon lex = Lexicon::load_merge({testutil::data_dir() / "lexicon_base.tsv"});
  const auto fw = FunctionWordTables::load(testutil::data_dir() / "function_words.tsv");
  const Scorer baseline = make_lexicon_baseline(lex, fw);
  const EmotionVector v = baseline({"id", {"非常", "高兴"}});
  CHECK(v.scores[eidx(Emotion::Happy)] == 12.25);
}

TEST_CASE("truth jsonl reader handles judgeable, unjudgeable and bad rows") {
  testutil::TempDir tmp("truth");
  testutil::write_file(tmp / "t.jsonl",
                       R"({"id":"a","polarity":"positive","dominant_emotion":"Happy"})"
                       "\n"
                       R"({"id":"b","dominant_emotion":"UNJUDGEABLE"})"
                       "\n");
  const auto labels = read_truth_jsonl(tmp / "t.jsonl");
  REQUIRE(labels.size() == 2);
  CHECK(labels[0].polarity == Polarity::Positive);
  CHECK(labels[0].dominant == Emotion::Happy);
  CHECK_FALSE(labels[0].unjudgeable);
  CHECK(labels[1].unjudgeable);

  testutil::write_file(tmp / "bad.jsonl",
                       R"({"id":"x","polarity":"positive","dominant_emotion":"Meh"})" "\n");
  CHECK_THROWS_AS(read_truth_jsonl(tmp / "bad.jsonl"), ParseError);
  testutil::write_file(tmp / "bad2.jsonl",
                       R"({"id":"x","polarity":"sideways","dominant_emotion":"Happy"})" "\n");
  CHECK_THROWS_AS(read_truth_jsonl(tmp / "bad2.jsonl"), ParseError);
}

TEST_CASE("eval report writers") {
  const auto partition = happy_partition(8, 2);
  const Scorer truth = make_truth_scorer(partition.truth);
  const ErrorReport report = run_comparison(partition, truth, make_uniform_baseline());

  testutil::TempDir tmp("report");
  write_eval_report_json(tmp / "e.json", report);
  write_eval_report_text(tmp / "e.txt", report);
  const std::string j = testutil::read_file(tmp / "e.json");
  CHECK(j.find("eval-v1") != std::string::npos);
  CHECK(j.find("unjudgeable_rate") != std::string::npos);
  CHECK(j.find("below_boundary") != std::string::npos);
  const std::string t = testutil::read_file(tmp / "e.txt");
  CHECK(t.find("sample") != std::string::npos);
  CHECK(t.find("0.2") != std::string::npos);
  CHECK(t.find("unjudgeable") != std::string::npos);
}
