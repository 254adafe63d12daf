// End-to-end acceptance checks for the analytics pipeline. Each check prints
// one PASS/FAIL line; the process exits nonzero if any check fails. These are
// the release-gate properties: decoder optimality, lossless tokenization,
// dedup guarantees, exact-arithmetic classifier agreement, scorer algebra,
// orientation sign recovery, burst exactness, aggregation conservation,
// evaluation sanity and whole-pipeline determinism.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "opinion/bloom_filter.hpp"
#include "opinion/cooccurrence.hpp"
#include "opinion/emotion_scorer.hpp"
#include "opinion/eval.hpp"
#include "opinion/hmm.hpp"
#include "opinion/lexicon.hpp"
#include "opinion/naive_bayes.hpp"
#include "opinion/new_words.hpp"
#include "opinion/segmenter.hpp"
#include "opinion/so_pmi.hpp"
#include "opinion/trends.hpp"
#include "opinion/utf8.hpp"
#include "test_util.hpp"
#include "viterbi_oracle.hpp"

namespace fs = std::filesystem;
using namespace opinion;
using boost::multiprecision::cpp_rational;
using Clock = std::chrono::steady_clock;

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& detail) {
  if (!ok) throw CheckFailure(detail);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------- decoding

void check_viterbi_optimality() {
  const auto start = Clock::now();
  const std::vector<char32_t> alphabet = {U'一', U'二', U'三', U'四',
                                          U'五', U'六', U'七', U'八'};
  std::mt19937_64 rng(811424u);
  std::uniform_int_distribution<size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<size_t> len(1, 8);

  for (int m = 0; m < 20; ++m) {
    const HmmModel model = testutil::make_random_model(rng, alphabet);
    for (int i = 0; i < 25; ++i) {
      std::vector<char32_t> chars(len(rng));
      for (auto& c : chars) c = alphabet[pick(rng)];
      const auto got = viterbi_tags(model, chars);
      const auto want = testutil::oracle_decode(model, chars);
      expect(testutil::valid_tag_sequence(got),
             "decoder emitted an invalid sequence on " + utf8_encode(chars));
      expect(testutil::oracle_score(model, chars, got) == want.score,
             "decoded log-prob differs from the exhaustive max on " +
                 utf8_encode(chars));
      if (want.n_best == 1) {
        expect(got == want.tags,
               "decoder disagrees with the unique exhaustive argmax on " +
                   utf8_encode(chars));
      }
    }
  }

  // Tie-break conformance, checked where ties are exact by construction:
  // under the uniform-split model every valid sequence folds the identical
  // addends in the identical order, so all of them share one bitwise score
  // and the decoded sequence must be the positional minimum from the end.
  const HmmModel ties = testutil::make_tie_model(alphabet);
  for (size_t n = 1; n <= 8; ++n) {
    std::vector<char32_t> chars(n);
    for (size_t i = 0; i < n; ++i) chars[i] = alphabet[i % alphabet.size()];
    const auto got = viterbi_tags(ties, chars);
    const auto want = testutil::oracle_decode(ties, chars);
    expect(got == want.tags, "tie-break rule diverges from exhaustive search at length " +
                                 std::to_string(n));
  }
  expect(seconds_since(start) < 10.0, "decoder comparison exceeded 10s");
}

void check_reconstruction() {
  std::mt19937_64 rng(271828u);
  const std::vector<char32_t> alphabet = {U'你', U'好', U'世', U'界'};
  const HmmModel model = testutil::make_random_model(rng, alphabet);

  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<uint32_t> cjk(0x4E00, 0x9FFF);
  std::uniform_int_distribution<uint32_t> ascii(0x20, 0x7E);
  std::uniform_int_distribution<uint32_t> emoji(0x1F600, 0x1F64F);
  std::uniform_int_distribution<size_t> len(0, 24);

  for (int i = 0; i < 10000; ++i) {
    std::string text;
    const size_t n = len(rng);
    for (size_t j = 0; j < n; ++j) {
      switch (kind(rng)) {
        case 0:
          utf8_append(text, alphabet[j % alphabet.size()]);
          break;
        case 1:
          utf8_append(text, static_cast<char32_t>(cjk(rng)));
          break;
        case 2:
          utf8_append(text, static_cast<char32_t>(emoji(rng)));
          break;
        case 3:
          utf8_append(text, U'。');
          break;
        default:
          utf8_append(text, static_cast<char32_t>(ascii(rng)));
      }
    }
    const auto tokens = viterbi_segment(model, text);
    std::string rebuilt;
    for (const auto& t : tokens) rebuilt += t;
    expect(rebuilt == text, "tokens do not rebuild the input bytes: " + text);
  }
}

// ------------------------------------------------------------------ dedup

void check_bloom_guarantees() {
  const auto start = Clock::now();
  const uint64_t m = uint64_t(1) << 20;
  const uint32_t k = 7;
  const uint64_t n = 100000;

  BloomFilter filter(m, k, 9157u);
  for (uint64_t i = 0; i < n; ++i) {
    filter.check_and_insert("in:" + std::to_string(i));
  }
  for (uint64_t i = 0; i < n; ++i) {
    expect(filter.contains("in:" + std::to_string(i)),
           "false negative on key in:" + std::to_string(i));
  }

  uint64_t hits = 0;
  for (uint64_t i = 0; i < n; ++i) {
    if (filter.contains("out:" + std::to_string(i))) ++hits;
  }
  const double measured = static_cast<double>(hits) / static_cast<double>(n);
  const double analytic = BloomFilter::analytic_fpr(m, k, n);
  expect(measured >= 0.5 * analytic && measured <= 1.5 * analytic,
         "measured fpr " + std::to_string(measured) + " outside +/-50% of analytic " +
             std::to_string(analytic));
  expect(seconds_since(start) < 5.0, "bloom check exceeded 5s");
}

// ------------------------------------------------------------- classifier

cpp_rational exact_posterior(const NbModel& model, const cpp_rational& prior_pos,
                             const std::vector<std::string>& tokens, NbClass winner) {
  const cpp_rational delta(1, static_cast<int64_t>(model.v_total));
  std::map<std::string, uint64_t> uses;
  for (const auto& t : tokens) ++uses[t];

  std::array<cpp_rational, 2> joint = {prior_pos, 1 - prior_pos};
  for (const auto& [word, count] : uses) {
    const uint64_t mult = model.options.use_term_frequency ? count : 1;
    for (int c = 0; c < 2; ++c) {
      const cpp_rational p =
          (cpp_rational(model.weight(word, static_cast<NbClass>(c))) + delta) /
          (cpp_rational(model.class_weight_sum[c]) + delta * model.v_total);
      for (uint64_t i = 0; i < mult; ++i) joint[c] *= p;
    }
  }
  return joint[static_cast<int>(winner)] / (joint[0] + joint[1]);
}

void check_classifier_exactness() {
  const std::vector<LabeledDoc> toy = {
      {{"好", "棒"}, NbClass::Positive},
      {{"好", "开心"}, NbClass::Positive},
      {{"棒"}, NbClass::Positive},
      {{"差", "难过", "糟糕", "坏", "哭"}, NbClass::Negative},
  };
  const NbModel toy_model = nb_train(toy, {});
  expect(toy_model.prior[0] == 0.75 && toy_model.prior[1] == 0.25,
         "document-share priors are not exactly {0.75, 0.25}");

  const std::vector<std::string> vocab = {"好", "棒", "开心", "差",  "难过", "糟糕",
                                          "坏", "哭", "安心", "感动", "失望", "火星"};
  std::mt19937_64 rng(60902u);
  std::uniform_int_distribution<size_t> pick(0, vocab.size() - 2);  // exclude 火星
  std::uniform_int_distribution<size_t> len(1, 6);
  std::bernoulli_distribution positive(0.6);

  std::vector<LabeledDoc> corpus;
  uint64_t n_pos = 0;
  for (int i = 0; i < 30; ++i) {
    LabeledDoc doc;
    doc.second = positive(rng) ? NbClass::Positive : NbClass::Negative;
    if (i == 0) doc.second = NbClass::Positive;
    if (i == 1) doc.second = NbClass::Negative;
    for (size_t j = 0, m = len(rng); j < m; ++j) doc.first.push_back(vocab[pick(rng)]);
    if (doc.second == NbClass::Positive) ++n_pos;
    corpus.push_back(std::move(doc));
  }
  const NbModel model = nb_train(corpus, {});
  const cpp_rational prior_pos(n_pos, corpus.size());

  std::uniform_int_distribution<size_t> any(0, vocab.size() - 1);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> tokens;
    for (size_t j = 0, m = len(rng); j < m; ++j) tokens.push_back(vocab[any(rng)]);
    const PolarityResult got = nb_classify(model, tokens);
    const cpp_rational want = exact_posterior(model, prior_pos, tokens, got.label);
    const double diff = std::abs(got.confidence - want.convert_to<double>());
    expect(diff <= 1e-9, "classifier confidence off the exact-arithmetic value by " +
                             std::to_string(diff));
    expect(want >= cpp_rational(1, 2),
           "reported winner does not hold the posterior majority");
  }
}

// ----------------------------------------------------------------- scorer

void check_scorer_algebra() {
  const std::vector<std::string> words = {"甲", "乙", "丙", "丁"};
  std::mt19937_64 rng(140913u);
  std::uniform_int_distribution<int> intensity_step(0, 4);  // 0 or odd 1..9 via 2s+1
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<size_t> len(1, 8);
  std::uniform_int_distribution<int> tok(0, 5);

  FunctionWordTables fw;
  fw.negations.insert("非");
  fw.degree_adverbs["超"] = 2.0;
  fw.degree_adverbs["些"] = 0.5;

  for (int iter = 0; iter < 1000; ++iter) {
    Lexicon lex;
    Lexicon doubled;
    for (const auto& w : words) {
      SentimentEntry entry;
      entry.word = w;
      entry.polarity = coin(rng) ? Polarity::Positive : Polarity::Negative;
      bool any = false;
      for (int e = 0; e < kEmotionCount; ++e) {
        const int step = intensity_step(rng);
        if (step == 0) continue;
        entry.intensities[e] = 2 * step - 1;
        any = true;
      }
      if (!any) entry.intensities[iter % kEmotionCount] = 5;
      SentimentEntry twice = entry;
      for (int e = 0; e < kEmotionCount; ++e) twice.intensities[e] *= 2;
      lex.upsert(entry);
      doubled.upsert(twice);
    }

    std::vector<std::string> tail;
    for (size_t j = 0, n = len(rng); j < n; ++j) {
      switch (tok(rng)) {
        case 0: tail.push_back("非"); break;
        case 1: tail.push_back("超"); break;
        case 2: tail.push_back("些"); break;
        default: tail.push_back(words[tok(rng) % words.size()]);
      }
    }

    // double negation cancels exactly
    std::vector<std::string> negated = {"非", "非"};
    negated.insert(negated.end(), tail.begin(), tail.end());
    const EmotionVector plain = score_emotions(tail, lex, fw);
    const EmotionVector twice_negated = score_emotions(negated, lex, fw);
    for (int e = 0; e < kEmotionCount; ++e) {
      expect(plain.scores[e] == twice_negated.scores[e], "double negation is not exact");
    }

    // negation and degree commute: both just multiply the running weight
    std::vector<std::string> neg_deg = {"非", "超"};
    std::vector<std::string> deg_neg = {"超", "非"};
    neg_deg.insert(neg_deg.end(), tail.begin(), tail.end());
    deg_neg.insert(deg_neg.end(), tail.begin(), tail.end());
    const EmotionVector a = score_emotions(neg_deg, lex, fw);
    const EmotionVector b = score_emotions(deg_neg, lex, fw);
    for (int e = 0; e < kEmotionCount; ++e) {
      expect(a.scores[e] == b.scores[e], "modifier order changed the score");
    }

    // doubling every intensity doubles every score exactly
    const EmotionVector big = score_emotions(tail, lex, fw);
    const EmotionVector big2 = score_emotions(tail, doubled, fw);
    for (int e = 0; e < kEmotionCount; ++e) {
      expect(big2.scores[e] == 2.0 * big.scores[e], "intensity scaling is not linear");
    }

    // dominant = first emotion with the largest absolute score
    int want = 0;
    for (int e = 1; e < kEmotionCount; ++e) {
      if (std::abs(plain.scores[e]) > std::abs(plain.scores[want])) want = e;
    }
    expect(static_cast<int>(plain.dominant()) == want,
           "dominant emotion is not the absolute-value argmax");
  }
}

// ----------------------------------------------------------- orientation

double reference_so_pmi(const std::vector<std::vector<std::string>>& sentences,
                        int window, const std::string& word,
                        const std::set<std::string>& pos,
                        const std::set<std::string>& neg) {
  std::map<std::string, uint64_t> count;
  std::map<std::pair<std::string, std::string>, uint64_t> pairs;
  uint64_t total = 0;
  for (const auto& s : sentences) {
    for (size_t i = 0; i < s.size(); ++i) {
      ++count[s[i]];
      ++total;
      for (size_t j = i + 1; j < s.size() && j - i <= static_cast<size_t>(window); ++j) {
        auto key = std::minmax(s[i], s[j]);
        ++pairs[{key.first, key.second}];
      }
    }
  }
  const auto pair_of = [&](const std::string& a, const std::string& b) {
    auto key = std::minmax(a, b);
    auto it = pairs.find({key.first, key.second});
    return it == pairs.end() ? uint64_t(0) : it->second;
  };
  const auto pmi_of = [&](const std::string& a, const std::string& b) {
    const double joint = static_cast<double>(pair_of(a, b) + 1);
    const double ca = static_cast<double>(std::max<uint64_t>(count[a], 1));
    const double cb = static_cast<double>(std::max<uint64_t>(count[b], 1));
    return std::log2(joint * static_cast<double>(total) / (ca * cb));
  };
  double so = 0.0;
  for (const auto& s : pos) so += pmi_of(word, s);
  for (const auto& s : neg) so -= pmi_of(word, s);
  return so;
}

void check_orientation() {
  const std::set<std::string> pos_seeds = {"安心", "满意"};
  const std::set<std::string> neg_seeds = {"愤怒", "绝望"};
  const std::vector<std::string> planted_pos = {"暖心", "给力", "点赞", "靠谱", "欣慰"};
  const std::vector<std::string> planted_neg = {"添堵", "堵心", "闹心", "坑人", "糟心"};

  std::vector<std::vector<std::string>> sentences;
  std::mt19937_64 rng(31207u);
  std::uniform_int_distribution<size_t> pick(0, 1);
  for (int round = 0; round < 20; ++round) {
    for (const auto& w : planted_pos) {
      sentences.push_back({w, *std::next(pos_seeds.begin(), pick(rng)), "今天"});
    }
    for (const auto& w : planted_neg) {
      sentences.push_back({"今天", w, *std::next(neg_seeds.begin(), pick(rng))});
    }
    sentences.push_back({"安心", "满意", "愤怒", "绝望"});  // seeds co-occur too
  }

  const CooccurrenceStats stats = build_cooccurrence(sentences, 5);
  for (const auto& w : planted_pos) {
    expect(so_pmi(stats, w, pos_seeds, neg_seeds) > 0,
           "planted positive word scored negative: " + w);
  }
  for (const auto& w : planted_neg) {
    expect(so_pmi(stats, w, pos_seeds, neg_seeds) < 0,
           "planted negative word scored positive: " + w);
  }

  std::vector<std::string> all = planted_pos;
  all.insert(all.end(), planted_neg.begin(), planted_neg.end());
  for (const auto& w : all) {
    const double got = so_pmi(stats, w, pos_seeds, neg_seeds);
    const double ref = reference_so_pmi(sentences, 5, w, pos_seeds, neg_seeds);
    expect(std::abs(got - ref) <= 1e-9, "orientation differs from the recount for " + w);
    const double mirrored = so_pmi(stats, w, neg_seeds, pos_seeds);
    expect(std::abs(got + mirrored) <= 1e-9, "orientation is not antisymmetric for " + w);
  }
}

// ---------------------------------------------------------------- mining

void check_burst_exactness() {
  const std::vector<std::string> left = {"晨", "夜", "雨", "雪", "风", "雷", "霜", "雾"};
  const std::vector<std::string> right = {"东", "西", "南", "北", "前", "后", "左", "右"};

  std::vector<std::vector<std::string>> slices(5);
  for (int day = 0; day < 5; ++day) {
    for (int i = 0; i < 10; ++i) {  // steady background word in every slice
      slices[day].push_back(left[i % 4] + "平稳" + right[i % 4]);
      slices[day].push_back("\n");
    }
  }
  for (int i = 0; i < 50; ++i) {  // the burst only exists on the final day
    slices[4].push_back(left[i % left.size()] + "封城" + right[i % right.size()]);
    slices[4].push_back("\n");
  }

  MinerParams params;
  const auto found = mine_new_words(slices, params);
  expect(!found.empty(), "planted burst word was not mined");
  const NewWordCandidate& top = found.front();
  expect(top.ngram == "封城", "top candidate is " + top.ngram + ", not the planted word");
  expect(top.freq_today == 50, "burst frequency is not the planted 50");
  expect(top.freq_baseline == 0.0, "baseline of an unseen word is not zero");
  expect(top.burst_ratio == 51.0, "burst ratio is not exactly (50+1)/(0+1)");
  for (const auto& c : found) {
    expect(c.ngram.find("平稳") == std::string::npos,
           "steady word leaked through the burst filter: " + c.ngram);
  }

  MinerParams permissive;
  permissive.min_burst_ratio = 1.0000001;
  permissive.min_cohesion = 0.0;
  permissive.min_boundary_entropy = 0.0;
  for (const auto& c : mine_new_words(slices, permissive)) {
    expect(c.ngram != "平稳", "uniform word emitted despite burst threshold above 1");
  }
}

// ------------------------------------------------------------ aggregation

void check_trend_conservation() {
  std::mt19937_64 rng(50213u);
  std::uniform_int_distribution<int> day(1, 9);
  std::uniform_int_distribution<int> emo(0, kEmotionCount - 1);
  std::uniform_int_distribution<int> kind(0, 6);
  std::uniform_real_distribution<double> score(-9.0, 9.0);

  for (int round = 0; round < 100; ++round) {
    std::vector<DocumentResult> results;
    const size_t n = 1 + static_cast<size_t>(rng() % 120);
    for (size_t i = 0; i < n; ++i) {
      DocumentResult r;
      r.id = "d" + std::to_string(i);
      char ts[32];
      std::snprintf(ts, sizeof(ts), "2020-03-%02dT12:00:00Z", day(rng));
      r.fetched_at = kind(rng) == 0 ? "invalid" : ts;
      if (kind(rng) == 1) {
        r.emotions.flags = kFlagLexiconSilent;
      } else {
        r.emotions.scores[emo(rng)] = score(rng);
        if (kind(rng) == 2) r.emotions.flags = kFlagFallback;
      }
      results.push_back(std::move(r));
    }
    const AggregateResult agg = aggregate(results);
    uint64_t placed = agg.skipped;
    for (size_t i = 0; i < agg.series.size(); ++i) {
      const TrendSeries& s = agg.series[i];
      uint64_t count_sum = 0;
      for (int e = 0; e < kEmotionCount; ++e) count_sum += s.counts[e];
      expect(count_sum + s.n_lexicon_silent == s.n_docs,
             "dominant counts plus silent docs do not cover bucket " + s.bucket);
      expect(s.n_docs > 0, "empty bucket emitted");
      if (i > 0) {
        expect(agg.series[i - 1].bucket < s.bucket, "buckets are not strictly increasing");
      }
      placed += s.n_docs;
    }
    expect(placed == results.size(), "documents lost or duplicated across buckets");
  }
}

// ------------------------------------------------------------- evaluation

void check_eval_self_comparison() {
  std::vector<EvalComment> comments;
  std::vector<TruthLabel> labels;
  for (int i = 0; i < 40; ++i) {
    const std::string id = "c" + std::to_string(1000 + i);
    comments.push_back({id, {"词"}});
    if (i % 10 == 3) continue;  // four comments stay unlabeled
    TruthLabel t;
    t.id = id;
    if (i % 10 == 4) {
      t.unjudgeable = true;  // four explicit unjudgeable labels
    } else {
      t.polarity = i % 2 ? Polarity::Positive : Polarity::Negative;
      t.dominant = static_cast<Emotion>(i % kEmotionCount);
    }
    labels.push_back(std::move(t));
  }

  const auto partition = SamplePartition::build(comments, labels, 8);
  const Scorer truth = make_truth_scorer(partition.truth);
  const ErrorReport report = run_comparison(partition, truth, make_uniform_baseline());

  expect(report.n_comments == 40, "comment count drifted");
  expect(report.n_judged == 32, "judged count is not the planted 32");
  expect(report.n_unjudgeable == 8, "unjudgeable count is not the planted 8");
  expect(report.unjudgeable_rate == 0.2, "unjudgeable rate is not exactly 8/40");
  for (double err : report.system.per_sample_error) {
    expect(err == 0.0, "self comparison has nonzero emotion error");
  }
  expect(report.system.n_below == report.n_judged,
         "not every judged comment sits below the 0.2 error boundary");
  expect(report.system.n_above == 0, "self comparison produced polarity errors");
}

// ------------------------------------------------------------ determinism

int run_pipeline_stage(const std::string& stage, const fs::path& out) {
  const std::string cmd = std::string(OPINION_CLI_PATH) + " --config \"" +
                          (testutil::data_dir() / "pipeline.toml").string() +
                          "\" --out \"" + out.string() + "\" " + stage +
                          " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::map<std::string, std::string> read_tree(const fs::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    files[fs::relative(entry.path(), root).string()] = testutil::read_file(entry.path());
  }
  return files;
}

void check_pipeline_determinism() {
  const auto start = Clock::now();
  const std::vector<std::string> stages = {"ingest",     "train-hmm", "segment",
                                           "expand-lexicon", "mine-words", "train-nb",
                                           "classify",   "score",     "trend",
                                           "eval"};
  testutil::TempDir a("accept-run-a");
  testutil::TempDir b("accept-run-b");
  for (const auto& stage : stages) {
    expect(run_pipeline_stage(stage, a) == 0, "first run failed at stage " + stage);
    expect(run_pipeline_stage(stage, b) == 0, "second run failed at stage " + stage);
  }

  const auto tree_a = read_tree(a);
  const auto tree_b = read_tree(b);
  expect(!tree_a.empty(), "pipeline produced no artifacts");
  expect(tree_a.size() == tree_b.size(), "runs produced different artifact sets");
  for (const auto& [name, bytes] : tree_a) {
    const auto it = tree_b.find(name);
    expect(it != tree_b.end(), "artifact missing from the second run: " + name);
    expect(it->second == bytes, "artifact differs between runs: " + name);
  }
  expect(seconds_since(start) < 60.0, "double pipeline run exceeded 60s");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void()>>> checks = {
      {"viterbi decoding matches exhaustive search", check_viterbi_optimality},
      {"segmentation reconstructs input bytes", check_reconstruction},
      {"bloom dedup: zero false negatives, calibrated false positives",
       check_bloom_guarantees},
      {"polarity classifier matches exact-arithmetic reference", check_classifier_exactness},
      {"emotion scorer algebra (negation, modifiers, linearity, dominance)",
       check_scorer_algebra},
      {"semantic orientation recovers planted signs and matches recount",
       check_orientation},
      {"new-word mining: planted burst exact, steady words suppressed",
       check_burst_exactness},
      {"trend aggregation conserves every document", check_trend_conservation},
      {"evaluation self-comparison is perfect and judgeability explicit",
       check_eval_self_comparison},
      {"full pipeline is deterministic end to end", check_pipeline_determinism},
  };

  int failures = 0;
  for (const auto& [name, fn] : checks) {
    try {
      fn();
      std::printf("PASS  %s\n", name);
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL  %s: %s\n", name, e.what());
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
