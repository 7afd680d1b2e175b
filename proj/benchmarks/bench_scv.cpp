#include <benchmark/benchmark.h>

#include <random>

#include "scv/bounds.hpp"
#include "scv/impossibility.hpp"
#include "scv/instances.hpp"
#include "scv/verifier.hpp"

using namespace scv;

namespace {

LocationProfile random_profile(std::mt19937_64& rng, int n, int dim) {
  LocationProfile x;
  for (int i = 0; i < n; ++i) {
    std::vector<double> c(static_cast<std::size_t>(dim));
    for (double& v : c) v = -5.0 + 10.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    x.push_back(Point(std::move(c)));
  }
  return x;
}

void BM_Opt(benchmark::State& state) {
  std::mt19937_64 rng(1);
  CandidateSet cs = instance_simplex(5, 3.0);
  const LocationProfile x = random_profile(rng, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(opt(x, cs));
  }
}
BENCHMARK(BM_Opt)->Arg(8)->Arg(32)->Arg(128);

void BM_PairIndependent(benchmark::State& state) {
  CandidateSet cs = instance_simplex(5, 3.0);
  std::vector<int> actions;
  for (int i = 0; i < state.range(0); ++i) actions.push_back(i % 5);
  Election e(cs, actions);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_independent(e));
  }
}
BENCHMARK(BM_PairIndependent)->Arg(10)->Arg(100);

void BM_DistortionSearchTwoExtremes(benchmark::State& state) {
  const Mechanism te = two_extremes_mechanism();
  CandidateSet cs = instance_line3();
  DistortionConfig cfg;
  cfg.n_random = 500;
  for (auto _ : state) {
    benchmark::DoNotOptimize(distortion_search(te, cs, static_cast<int>(state.range(0)), cfg));
  }
}
BENCHMARK(BM_DistortionSearchTwoExtremes)->Arg(4)->Arg(6)->Arg(8);

void BM_DistortionSearchSequentialDictator(benchmark::State& state) {
  const Mechanism sd = sequential_dictator_mechanism();
  CandidateSet cs = instance_simplex(4, 3.0);
  DistortionConfig cfg;
  cfg.simplex = SimplexParams{4, 3.0};
  cfg.n_random = 500;
  for (auto _ : state) {
    benchmark::DoNotOptimize(distortion_search(sd, cs, static_cast<int>(state.range(0)), cfg));
  }
}
BENCHMARK(BM_DistortionSearchSequentialDictator)->Arg(4)->Arg(6)->Arg(8);

void BM_SpCheckPairIndependent(benchmark::State& state) {
  const Mechanism pi = pair_independent_mechanism();
  CandidateSet cs = instance_simplex(4, 3.0);
  SpConfig cfg;
  cfg.max_n = static_cast<int>(state.range(0));
  cfg.simplex = SimplexParams{4, 3.0};
  cfg.n_random = 100;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_strategy_proof(pi, cs, cfg));
  }
}
BENCHMARK(BM_SpCheckPairIndependent)->Arg(3)->Arg(4);

void BM_SevenThirdsMinimax(benchmark::State& state) {
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(seven_thirds_minimax(step));
  }
}
BENCHMARK(BM_SevenThirdsMinimax)->Arg(100)->Arg(400);

void BM_Impossibility(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(deterministic_impossibility(3.0));
  }
}
BENCHMARK(BM_Impossibility);

}  // namespace

BENCHMARK_MAIN();
