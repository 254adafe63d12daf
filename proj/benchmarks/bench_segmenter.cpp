#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "opinion/hmm.hpp"
#include "opinion/segmenter.hpp"
#include "opinion/utf8.hpp"

namespace {

opinion::HmmModel trained_model() {
  const std::vector<std::vector<std::string>> corpus = {
      {"今天", "天气", "很", "好"},        {"我们", "一起", "加油"},
      {"医生", "护士", "辛苦", "了"},      {"希望", "早日", "结束"},
      {"大家", "都", "要", "平安", "健康"}, {"感谢", "所有", "志愿者"},
  };
  return opinion::hmm_train(corpus);
}

std::string mixed_text(size_t target_bytes) {
  const std::string unit = "今天天气很好, 我们一起加油! COVID-19 医生护士辛苦了。";
  std::string text;
  while (text.size() < target_bytes) text += unit;
  return text;
}

}  // namespace

static void BM_ViterbiTags(benchmark::State& state) {
  const opinion::HmmModel model = trained_model();
  std::vector<char32_t> chars =
      opinion::utf8_codepoints(mixed_text(static_cast<size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(opinion::viterbi_tags(model, chars));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(chars.size()));
}
BENCHMARK(BM_ViterbiTags)->Range(64, 4096);

static void BM_ViterbiSegment(benchmark::State& state) {
  const opinion::HmmModel model = trained_model();
  const std::string text = mixed_text(static_cast<size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(opinion::viterbi_segment(model, text));
  }
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(text.size()));
}
BENCHMARK(BM_ViterbiSegment)->Range(256, 1 << 16);

BENCHMARK_MAIN();
