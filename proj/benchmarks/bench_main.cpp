#include <benchmark/benchmark.h>

#include <numbers>

#include "phasefact/disk_analytic.hpp"
#include "phasefact/factorization.hpp"
#include "phasefact/fock_state.hpp"
#include "phasefact/wigner.hpp"

namespace {

using namespace phasefact;

void BM_Boundary(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const FockState f = make_su11_cs(0.7, n);
  for (auto _ : st) benchmark::DoNotOptimize(boundary(f, 8 * n));
}
BENCHMARK(BM_Boundary)->RangeMultiplier(4)->Range(64, 4096);

void BM_FactorizeOuter(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const FockState f = make_su11_cs(0.7, n);
  FactorOptions o;
  o.grid_size = 8 * n;
  for (auto _ : st) benchmark::DoNotOptimize(factorize(f, o));
}
BENCHMARK(BM_FactorizeOuter)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_FactorizeInner(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const FockState f = make_pi_superposition(0.8, 0.75 * std::numbers::pi, n);
  FactorOptions o;
  o.grid_size = 8 * n;
  for (auto _ : st) benchmark::DoNotOptimize(factorize(f, o));
}
BENCHMARK(BM_FactorizeInner)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

void BM_WignerGrid(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const FockState f = make_bg(2.0, n);
  for (auto _ : st) benchmark::DoNotOptimize(wigner_grid(f, n, 8 * n));
}
BENCHMARK(BM_WignerGrid)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
