#include <benchmark/benchmark.h>

#include "zvar/barnes.hpp"
#include "zvar/bessel.hpp"
#include "zvar/bessel_zeta.hpp"
#include "zvar/identities.hpp"

namespace {

void BM_ZetaCPrime0(benchmark::State& state) {
  const zvar::ParameterC c(2.5);
  for (auto _ : state) benchmark::DoNotOptimize(zvar::zeta_c_prime0(c));
}
BENCHMARK(BM_ZetaCPrime0);

void BM_Xi0(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zvar::xi0(0.75));
}
BENCHMARK(BM_Xi0);

void BM_J0Zero(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zvar::j0_zero(n));
}
BENCHMARK(BM_J0Zero)->Arg(1)->Arg(100)->Arg(1000);

// Route 0: integral, 1: sector, 2: closed.
void BM_DxiDc(benchmark::State& state) {
  const zvar::ParameterC c(3.7);
  const auto route = static_cast<zvar::Route>(state.range(0) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(zvar::dxi_dc(c, route));
}
BENCHMARK(BM_DxiDc)->DenseRange(0, 2);

void BM_DxiDcClosedInteger(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zvar::dxi_dc_closed_integer(j));
}
BENCHMARK(BM_DxiDcClosedInteger)->Arg(2)->Arg(12);

void BM_RunAll(benchmark::State& state) {
  const auto profile = zvar::ToleranceProfile::standard();
  for (auto _ : state) benchmark::DoNotOptimize(zvar::run_all(profile));
}
BENCHMARK(BM_RunAll)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
