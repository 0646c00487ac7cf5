#include <benchmark/benchmark.h>

#include <random>

#include "lyrica/explicit.hpp"
#include "lyrica/ssm.hpp"
#include "lyrica/synthetic.hpp"
#include "lyrica/text.hpp"
#include "lyrica/topics.hpp"

namespace {

std::u32string random_text(std::mt19937_64& rng, std::size_t n) {
  std::u32string s(n, U'a');
  for (auto& c : s) c = static_cast<char32_t>(U'a' + rng() % 12);
  return s;
}

void BM_EditDistance(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_text(rng, n);
  const auto b = random_text(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(lyrica::edit_distance(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EditDistance)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNSquared);

void BM_LineSsm(benchmark::State& state) {
  lyrica::synthetic::StructuredOptions options;
  options.songs = 20;
  const auto corpus = lyrica::synthetic::structured_corpus(options);
  for (auto _ : state) {
    for (const auto& song : corpus) benchmark::DoNotOptimize(lyrica::line_ssm(song));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_LineSsm);

void BM_LdaSweep(benchmark::State& state) {
  lyrica::synthetic::TopicOptions options;
  options.documents = 500;
  const auto data = lyrica::synthetic::topic_corpus(options);
  lyrica::LdaConfig config;
  config.topics = static_cast<std::size_t>(state.range(0));
  config.iterations = 10;
  for (auto _ : state) benchmark::DoNotOptimize(lyrica::train_lda(data.documents, config));
  state.SetItemsProcessed(state.iterations() * config.iterations *
                          static_cast<std::int64_t>(options.documents * options.document_length));
}
BENCHMARK(BM_LdaSweep)->Arg(4)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_TfidfTraining(benchmark::State& state) {
  lyrica::synthetic::ExplicitOptions options;
  options.songs = 1000;
  const auto data = lyrica::synthetic::explicit_corpus(options);
  const auto docs = lyrica::labelled_documents(data.corpus);
  lyrica::ExplicitTrainOptions train;
  train.iterations = 100;
  for (auto _ : state) benchmark::DoNotOptimize(lyrica::train_tfidf_regression(docs, train));
}
BENCHMARK(BM_TfidfTraining)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
