#include <benchmark/benchmark.h>

#include <random>

#include "cisupport/cli/catalog.hpp"
#include "cisupport/kernels/dense_modp.hpp"
#include "cisupport/kernels/parallel.hpp"

using namespace cisupport;

namespace {

kernels::DenseMatrix random_matrix(const Field& k, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  kernels::DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<Coef>(rng() % k.size());
  return m;
}

template <bool Parallel>
void BM_Rref(benchmark::State& state) {
  const Field k(32003);
  const auto base = random_matrix(k, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    auto m = base;
    auto info = Parallel ? kernels::rref_parallel(k, m) : kernels::rref_serial(k, m);
    benchmark::DoNotOptimize(info);
  }
  state.counters["threads"] = Parallel ? kernels::thread_count() : 1;
}

// Membership of k at every nonzero point of F3^3: one hypersurface resolution
// per point, independent across points.
template <bool Parallel>
void BM_MembershipSweep(benchmark::State& state) {
  CIRing ci = ring_a3(3).ci;
  auto k = GradedModule::residue_field(ci.ring());
  auto pts = all_points(ci.field(), ci.codim(), false);
  for (auto _ : state) {
    auto hits = kernels::parallel_map<char>(
        static_cast<int>(pts.size()), [&](int i) { return static_cast<char>(membership(ci, k, k, pts[i])); }, Parallel);
    benchmark::DoNotOptimize(hits);
  }
  state.counters["threads"] = Parallel ? kernels::thread_count() : 1;
}

}  // namespace

BENCHMARK(BM_Rref<false>)->Name("rref/serial")->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Rref<true>)->Name("rref/parallel")->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MembershipSweep<false>)->Name("membership_sweep/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MembershipSweep<true>)->Name("membership_sweep/parallel")->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
