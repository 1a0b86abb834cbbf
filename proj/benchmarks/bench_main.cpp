// SPDX-License-Identifier: Apache-2.0

#include "toricdec/examples.hpp"
#include "toricdec/ishida.hpp"

#include <benchmark/benchmark.h>

using namespace toricdec;

namespace {

void BM_SmithForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = static_cast<long>((i * 7 + j * 13) % 11) - 5;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithForm)->Arg(4)->Arg(8)->Arg(16);

void BM_ClassGroup(benchmark::State& state) {
  const auto fan = standard_fans::projective_space(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(GradingSetup::from_fan(fan));
}
BENCHMARK(BM_ClassGroup)->Arg(2)->Arg(4)->Arg(6);

// Fresh expressions each round so the per-node cache does not hide the work.
void BM_CubicPieces(benchmark::State& state) {
  const auto box = degree_box({0, 0, 0}, state.range(0));
  for (auto _ : state) {
    const P2CubicExample ex = p2_cubic_example();
    std::size_t total = 0;
    for (const auto& a : box) total += evaluate(ex.f, a).dim();
    benchmark::DoNotOptimize(total);
  }
  state.counters["degrees"] = static_cast<double>(box.size());
}
BENCHMARK(BM_CubicPieces)->Arg(4)->Arg(6)->Arg(8);

void BM_CubicReport(benchmark::State& state) {
  const CheckOptions opts{state.range(0), 20, static_cast<unsigned>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(p2_cubic_report(opts));
}
BENCHMARK(BM_CubicReport)->Args({6, 1})->Args({6, 4})->Unit(benchmark::kMillisecond);

void BM_OmegaCheck(benchmark::State& state) {
  const auto fan = state.range(0) == 0 ? standard_fans::projective_plane() : standard_fans::p1_x_p1();
  for (auto _ : state) benchmark::DoNotOptimize(omega_decomposition_check(fan, {5, 20, 1}, 4));
}
BENCHMARK(BM_OmegaCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Localize(benchmark::State& state) {
  const TorsionExample ex = quadric_cone_example();
  for (auto _ : state) benchmark::DoNotOptimize(sheafification_zero(ex.e, ex.setup, {state.range(0), 20, 1}));
}
BENCHMARK(BM_Localize)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
