// Serial reference against OpenMP kernels. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "conabs/kernels.h"
#include "conabs/synthetic.h"
#include "conabs/trigram.h"
#include "conabs/wordgraph.h"

namespace conabs {
namespace {

std::vector<SparseVector> Rows(int n) {
  std::mt19937_64 rng(1);
  std::bernoulli_distribution keep(0.05);
  std::uniform_real_distribution<double> value(0.1, 2.0);
  std::vector<SparseVector> rows(n);
  for (auto& row : rows) {
    for (int d = 0; d < 2000; ++d) {
      if (keep(rng)) {
        row.index.push_back(d);
        row.value.push_back(value(rng));
      }
    }
  }
  return rows;
}

std::vector<IdSet> Sets(int n) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> id(0, 400);
  std::vector<IdSet> sets(n);
  for (auto& s : sets) {
    for (int k = 0; k < 8; ++k) s.push_back(id(rng));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return sets;
}

ExecutionPolicy PolicyOf(const benchmark::State& state) {
  return state.range(1) ? ExecutionPolicy::kParallel : ExecutionPolicy::kSerial;
}

void BM_CosineMatrix(benchmark::State& state) {
  const auto rows = Rows(static_cast<int>(state.range(0)));
  const ExecutionPolicy policy = PolicyOf(state);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::CosineMatrix(rows, policy));
}
BENCHMARK(BM_CosineMatrix)->ArgsProduct({{250, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_NearDuplicateKeep(benchmark::State& state) {
  const auto sets = Sets(static_cast<int>(state.range(0)));
  const ExecutionPolicy policy = PolicyOf(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::NearDuplicateKeep(sets, 0.7, policy));
  }
}
BENCHMARK(BM_NearDuplicateKeep)
    ->ArgsProduct({{5000, 20000}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_ScorePaths(benchmark::State& state) {
  SyntheticOptions options;
  options.num_tweets = static_cast<int>(state.range(0));
  const SyntheticCorpus corpus = GenerateCorpus(options);
  const WordGraph graph = WordGraph::Build(corpus.tweets);
  PathOptions po;
  po.max_paths = 2000;
  std::vector<TweetPath> paths = GeneratePaths(graph, po);
  const Centroid centroid = Centroid::Build(corpus.tweets);
  const TrigramModel model = TrigramModel::Train(LanguageModelCorpus(corpus.tweets));
  const ExecutionPolicy policy = PolicyOf(state);
  for (auto _ : state) {
    ScorePaths(paths, centroid, model, policy);
    benchmark::ClobberMemory();
  }
  state.counters["paths"] = static_cast<double>(paths.size());
}
BENCHMARK(BM_ScorePaths)->ArgsProduct({{2000}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace conabs

BENCHMARK_MAIN();
