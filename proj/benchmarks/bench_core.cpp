#include "soldyn/autdyn.hpp"
#include "soldyn/ergfind.hpp"
#include "soldyn/examples.hpp"
#include "soldyn/exactlin.hpp"
#include "soldyn/groupdyn.hpp"

#include <benchmark/benchmark.h>

using namespace soldyn;

namespace {

RatMatrix dense(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(static_cast<long>((3 * i + 5 * j + 1) % 7) - 3, 1 + (i + j) % 3);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += 4;
  return m;
}

GenSet diag_axes(std::size_t r) {
  std::vector<RatMatrix> gens;
  for (std::size_t k = 0; k < r; ++k) {
    RatMatrix m = RatMatrix::identity(r);
    m(k, k) = 2;
    gens.push_back(m);
  }
  return GenSet(r, Mode::solenoid, gens);
}

}  // namespace

static void BM_Charpoly(benchmark::State& state) {
  const RatMatrix m = dense(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(m));
}
BENCHMARK(BM_Charpoly)->DenseRange(2, 8, 2);

static void BM_AnalyzeAuto(benchmark::State& state) {
  const RatMatrix m = dense(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_auto(m));
}
BENCHMARK(BM_AnalyzeAuto)->DenseRange(2, 6, 2);

static void BM_FiniteOrbitSubspaceRotationGolden(benchmark::State& state) {
  RatMatrix m(4, 4);
  m(0, 1) = -1;
  m(1, 0) = 1;
  m(2, 2) = 1;
  m(2, 3) = 1;
  m(3, 2) = 1;
  const GenSet g(4, Mode::torus, {m});
  for (auto _ : state) benchmark::DoNotOptimize(finite_orbit_subspace_group(g));
}
BENCHMARK(BM_FiniteOrbitSubspaceRotationGolden);

static void BM_TowerSeries(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  const GenSet g(k, Mode::torus, {examples::tower_alpha(k)});
  for (auto _ : state) benchmark::DoNotOptimize(distal_series_group(g));
}
BENCHMARK(BM_TowerSeries)->DenseRange(2, 8, 2);

static void BM_FindErgodicAxisScalings(benchmark::State& state) {
  const GenSet g = diag_axes(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(find_ergodic_nilpotent(g));
}
BENCHMARK(BM_FindErgodicAxisScalings)->DenseRange(2, 4, 1);
BENCHMARK_MAIN();
