#include <benchmark/benchmark.h>

#include "hilbspine/dominance.hpp"
#include "hilbspine/macaulay.hpp"
#include "hilbspine/specialized.hpp"
#include "hilbspine/spine.hpp"

using namespace hilbspine;

static void BM_SpineGraph(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spine_graph(N));
}
BENCHMARK(BM_SpineGraph)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_UniversalRecursive(benchmark::State& state) {
  const MonomialIdeal M({11, 8, 4, 1, 1, 1, 1});
  const Grading g(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(universal_generators(M, g));
}
BENCHMARK(BM_UniversalRecursive);

static void BM_UniversalPathsum(benchmark::State& state) {
  const MonomialIdeal M({11, 8, 4, 1, 1, 1, 1});
  const Grading g(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(universal_generators_pathsum(M, g));
}
BENCHMARK(BM_UniversalPathsum);

static void BM_MinorSweep(benchmark::State& state) {
  const MonomialIdeal M({static_cast<int>(state.range(0)), 4, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(verify_minors_nonzero(M, 4));
}
BENCHMARK(BM_MinorSweep)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_DetBareissVsLaplace(benchmark::State& state) {
  const auto R = macaulay_matrix(MonomialIdeal({7, 5, 4, 2, 1}), Grading(1, 1), 5);
  PolyMatrix A;
  for (int r = 0; r < R.n0(); ++r) A.push_back(R.entries[r]);
  const bool bareiss = state.range(0) != 0;
  for (auto _ : state) {
    if (bareiss) {
      benchmark::DoNotOptimize(det_bareiss(A));
    } else {
      std::vector<int> rows;
      for (int r = 0; r < R.n0(); ++r) rows.push_back(r);
      MinorExpander mx(A);
      benchmark::DoNotOptimize(mx.det(rows));
    }
  }
}
BENCHMARK(BM_DetBareissVsLaplace)->Arg(1)->Arg(0);

static void BM_EdgeProbe(benchmark::State& state) {
  const HilbertFunction h({1, 1, 2, 1, 1});
  const Grading g(1, 2);
  const auto field = FieldSpec::prime(32003);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(edge_probe(h, g, field, 10, seed++));
}
BENCHMARK(BM_EdgeProbe);

static void BM_TropicalFingerprint(benchmark::State& state) {
  const MonomialIdeal M({6, 4, 2, 1});
  const Grading g(1, 1);
  const auto field = FieldSpec::prime(32003);
  std::mt19937_64 rng(17);
  const auto point = sample_point(VarTable::for_ideal(M, g).size(), field, rng);
  const auto J = specialize_ideal(M, g, point, field);
  for (auto _ : state) benchmark::DoNotOptimize(tropical_fingerprint(J));
}
BENCHMARK(BM_TropicalFingerprint);
