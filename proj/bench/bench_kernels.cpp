// Closed-form distance against the windowed object scans, serial and OpenMP,
// and the triple-defect kernel behind the geodesic checks.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "stabgeo/halfplane.hpp"
#include "stabgeo/kernels.hpp"
#include "stabgeo/metric.hpp"
#include "stabgeo/verify.hpp"

using namespace stabgeo;

namespace {

std::pair<StabPoint, StabPoint> sample_pair() {
  std::mt19937_64 rng(1);
  return {random_stab_point(rng, Form::Geometric), random_stab_point(rng, Form::Algebraic)};
}

void BM_ClosedForm(benchmark::State& state) {
  const auto [a, b] = sample_pair();
  for (auto _ : state) benchmark::DoNotOptimize(distance(a, b));
}
BENCHMARK(BM_ClosedForm);

void object_scan(benchmark::State& state, Exec exec) {
  const auto [a, b] = sample_pair();
  const int window = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_objects(a, b, window, exec));
  state.SetItemsProcessed(state.iterations() * (2 * window + 2));
}
void BM_ObjectScanSerial(benchmark::State& s) { object_scan(s, Exec::Serial); }
void BM_ObjectScanOpenMP(benchmark::State& s) { object_scan(s, Exec::Parallel); }
BENCHMARK(BM_ObjectScanSerial)->Arg(1000)->Arg(10000)->Arg(100000)->UseRealTime();
BENCHMARK(BM_ObjectScanOpenMP)->Arg(1000)->Arg(10000)->Arg(100000)->UseRealTime();

void triple_defect(benchmark::State& state, Exec exec) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::vector<HPoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(random_interior_hpoint(rng));
  const auto m = distance_matrix(
      n, [&](std::size_t i, std::size_t j) { return d_Z(pts[i], pts[j]); }, Exec::Parallel);
  for (auto _ : state) benchmark::DoNotOptimize(max_triple_defect(m, n, exec));
}
void BM_TripleDefectSerial(benchmark::State& s) { triple_defect(s, Exec::Serial); }
void BM_TripleDefectOpenMP(benchmark::State& s) { triple_defect(s, Exec::Parallel); }
BENCHMARK(BM_TripleDefectSerial)->Arg(128)->Arg(256)->UseRealTime();
BENCHMARK(BM_TripleDefectOpenMP)->Arg(128)->Arg(256)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
