#include <benchmark/benchmark.h>

#include "xop/classical.hpp"
#include "xop/determinantal.hpp"
#include "xop/moments.hpp"
#include "xop/numerics.hpp"

namespace {

using xop::ParameterContext;

// Table extent in both directions.
void BM_FillTable(benchmark::State& state) {
  const auto ctx = ParameterContext::parse("1.5", state.range(1));
  const int extent = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(xop::fill_table(ctx, extent, extent));
}
BENCHMARK(BM_FillTable)->Args({8, 256})->Args({16, 256})->Args({8, 1024})->Unit(benchmark::kMicrosecond);

void BM_GaussLaguerreRule(benchmark::State& state) {
  const xop::Real alpha = xop::Real::parse("1.5", 256);
  for (auto _ : state) {
    benchmark::DoNotOptimize(xop::gauss_laguerre_rule(alpha, static_cast<std::size_t>(state.range(0)), 256));
  }
}
BENCHMARK(BM_GaussLaguerreRule)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_UpperIncompleteGamma(benchmark::State& state) {
  const long bits = state.range(0);
  const xop::Real x = xop::Real::parse("-1.5", bits);
  const xop::Real a = xop::Real::parse("3.25", bits);
  for (auto _ : state) benchmark::DoNotOptimize(xop::upper_incomplete_gamma(x, a));
}
BENCHMARK(BM_UpperIncompleteGamma)->Arg(128)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);

void BM_Construct(benchmark::State& state) {
  const auto ctx = ParameterContext::parse("3.7");
  const int n = static_cast<int>(state.range(0));
  const auto method = static_cast<xop::Method>(state.range(1));
  const auto [i, j] = xop::required_extent(n);
  const xop::MomentTable table = xop::fill_table(ctx, i, j);
  for (auto _ : state) benchmark::DoNotOptimize(xop::construct(method, n, table));
  state.SetLabel(std::string(xop::to_string(method)));
}
BENCHMARK(BM_Construct)
    ->ArgsProduct({{4, 10}, {static_cast<long>(xop::Method::det_a), static_cast<long>(xop::Method::det_b),
                             static_cast<long>(xop::Method::gram_schmidt)}})
    ->Unit(benchmark::kMicrosecond);

void BM_ClosedForm(benchmark::State& state) {
  const auto ctx = ParameterContext::parse("3.7");
  for (auto _ : state) benchmark::DoNotOptimize(xop::closed_form_xop(static_cast<int>(state.range(0)), ctx));
}
BENCHMARK(BM_ClosedForm)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
