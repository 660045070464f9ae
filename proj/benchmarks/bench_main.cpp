#include <benchmark/benchmark.h>

#include "vicsek/chain.hpp"
#include "vicsek/critical_group.hpp"
#include "vicsek/identity.hpp"
#include "vicsek/monte_carlo.hpp"
#include "vicsek/recurrence.hpp"

using namespace vicsek;

static void BM_StabilizeAddOrigin(benchmark::State& state) {
  const auto g = build(static_cast<int>(state.range(0)));
  RandomStream rng(1);
  const auto eta = sample_recurrent(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(stabilize(g, add_particles(g, eta, {0, 0}, 1)));
}
BENCHMARK(BM_StabilizeAddOrigin)->DenseRange(2, 5);

static void BM_IdentityFromPower(benchmark::State& state) {
  const auto g = build(static_cast<int>(state.range(0)));
  const auto eta = max_stable_config(g);
  for (auto _ : state) benchmark::DoNotOptimize(identity_from_power(g, eta));
}
BENCHMARK(BM_IdentityFromPower)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_WilsonSample(benchmark::State& state) {
  const auto g = build(static_cast<int>(state.range(0)));
  RandomStream rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(sample_recurrent(g, rng));
}
BENCHMARK(BM_WilsonSample)->DenseRange(1, 4);

static void BM_SmithNormalForm(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(group_structure(level));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_RadiusPmf(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(radius_pmf(n));
}
BENCHMARK(BM_RadiusPmf)->Arg(9)->Arg(81)->Arg(729);

static void BM_MonteCarlo(benchmark::State& state) {
  McOptions o;
  o.mode = state.range(0) ? McMode::Sandpile : McMode::Chain;
  o.level = 4;
  o.trials = 10000;
  o.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(monte_carlo_stabilization(o));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(o.trials));
}
BENCHMARK(BM_MonteCarlo)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
