#include "d4/cone.hpp"
#include "d4/hilbert.hpp"
#include "d4/reptensor.hpp"
#include "d4/schubert.hpp"
#include "d4/triangles.hpp"

#include <benchmark/benchmark.h>

using namespace d4;

static void BM_SchubertRing(benchmark::State& state) {
  const Parabolic p(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SchubertRing ring(p);
    benchmark::DoNotOptimize(ring.size());
  }
}
BENCHMARK(BM_SchubertRing)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_DoubleDescription(benchmark::State& state) {
  const HRep h = HRep::from(full_system_functionals());
  for (auto _ : state) {
    VRep v = double_description(h);
    benchmark::DoNotOptimize(v.rays.size());
  }
}
BENCHMARK(BM_DoubleDescription)->Unit(benchmark::kMillisecond);

static void BM_HilbertBasis(benchmark::State& state) {
  const HRep lattice = to_lattice_coords(HRep::from(full_system_functionals()));
  for (auto _ : state) {
    HilbertBasis hb = hilbert_basis(lattice);
    benchmark::DoNotOptimize(hb.elements.size());
  }
}
BENCHMARK(BM_HilbertBasis)->Unit(benchmark::kMillisecond)->Iterations(3);

static void BM_InvariantDim(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DominantWeight a(n, 0, 1, 1), b(0, n, 0, 0), c(1, n, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_dim(a, b, c));
}
BENCHMARK(BM_InvariantDim)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
