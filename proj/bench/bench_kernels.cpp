// Serial references against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "k3lat/enumerate.hpp"
#include "k3lat/finite_form.hpp"
#include "k3lat/kummer.hpp"
#include "k3lat/orbit.hpp"

using namespace k3lat;

namespace {

const GramLattice& e8_sum() {
  static const GramLattice l = direct_sum({root_lattice_e8(), root_lattice_e8()});
  return l;
}

void BM_EnumerateSerial(benchmark::State& st) {
  const long norm = -2 * st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_vectors_serial(e8_sum(), norm));
}

void BM_EnumerateParallel(benchmark::State& st) {
  const long norm = -2 * st.range(0);
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_vectors(e8_sum(), norm, {0, true}));
}

const FiniteQuadraticForm& mg_form() {
  static const FiniteQuadraticForm f = discriminant_form(k4d_prime(6).lattice());
  return f;
}

void BM_CensusSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(q_census_serial(mg_form()));
}

void BM_CensusParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(q_census(mg_form()));
}

void BM_OrbitSweep(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(orbit_disjointness_sweep(7, st.range(0)));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CensusParallel)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_OrbitSweep)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
