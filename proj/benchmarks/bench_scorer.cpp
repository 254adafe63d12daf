#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "opinion/emotion_scorer.hpp"
#include "opinion/lexicon.hpp"

namespace {

opinion::Lexicon bench_lexicon() {
  opinion::Lexicon lex;
  const auto add = [&](const char* word, opinion::Polarity p, opinion::Emotion e,
                       int intensity) {
    opinion::SentimentEntry entry;
    entry.word = word;
    entry.polarity = p;
    entry.intensities[static_cast<int>(e)] = intensity;
    lex.upsert(std::move(entry));
  };
  add("高兴", opinion::Polarity::Positive, opinion::Emotion::Happy, 7);
  add("加油", opinion::Polarity::Positive, opinion::Emotion::Hopeful, 7);
  add("害怕", opinion::Polarity::Negative, opinion::Emotion::Frightened, 7);
  add("难过", opinion::Polarity::Negative, opinion::Emotion::Depressed, 5);
  add("生气", opinion::Polarity::Negative, opinion::Emotion::Angry, 5);
  return lex;
}

opinion::FunctionWordTables bench_function_words() {
  opinion::FunctionWordTables fw;
  fw.negations.insert("不");
  fw.degree_adverbs["很"] = 1.5;
  fw.degree_adverbs["非常"] = 1.75;
  return fw;
}

std::vector<std::string> bench_tokens(size_t n) {
  const std::vector<std::string> cycle = {"今天", "很",   "高兴", "不",  "害怕",
                                          "新闻", "非常", "加油", "医院", "难过"};
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (size_t i = 0; i < n; ++i) tokens.push_back(cycle[i % cycle.size()]);
  return tokens;
}

}  // namespace

static void BM_ScoreEmotions(benchmark::State& state) {
  const opinion::Lexicon lex = bench_lexicon();
  const opinion::FunctionWordTables fw = bench_function_words();
  const auto tokens = bench_tokens(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(opinion::score_emotions(tokens, lex, fw));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScoreEmotions)->Range(8, 8192);

BENCHMARK_MAIN();
