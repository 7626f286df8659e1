#include <benchmark/benchmark.h>

#include "dispo/bijection.hpp"
#include "dispo/disposition.hpp"
#include "dispo/plane_tree.hpp"
#include "dispo/polynomial.hpp"
#include "dispo/verifier.hpp"

namespace {

void BM_EnumeratePlaneTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    dispo::for_each_plane_tree(n, std::nullopt, [&](const dispo::PlaneTree&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePlaneTrees)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_EnumerateDispositions(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    dispo::for_each_disposition(m, 4, [&](const dispo::Disposition&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateDispositions)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_PhiRoundTrip(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto trees = dispo::enumerate_plane_trees(n);
  for (auto _ : state) {
    for (const auto& t : trees) benchmark::DoNotOptimize(dispo::phi_inverse(dispo::phi(t)));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * trees.size()));
}
BENCHMARK(BM_PhiRoundTrip)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_HomogeneousPolynomial(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dispo::homogeneous_disposition_polynomial(m, 6));
}
BENCHMARK(BM_HomogeneousPolynomial)->DenseRange(3, 6);

void BM_SampleTree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  dispo::DispositionSampler sampler(42);
  for (auto _ : state) benchmark::DoNotOptimize(dispo::phi_inverse(sampler(n - 1, n)));
}
BENCHMARK(BM_SampleTree)->Arg(7)->Arg(20)->Arg(31);

void BM_VerifyPlaneTrees(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dispo::verify_plane_trees(n));
}
BENCHMARK(BM_VerifyPlaneTrees)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
