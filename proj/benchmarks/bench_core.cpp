#include <benchmark/benchmark.h>

#include "mzv/closed_form.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/series.hpp"

namespace {

using namespace mzv;

void BM_EvalDirect(benchmark::State& state) {
  const SignedIndex index = parse_index("zeta(2,1,1)");
  series::TruncationOptions opts;
  opts.cutoff = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(series::eval_direct(index, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvalDirect)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_EvalAccelerated(benchmark::State& state) {
  const SignedIndex index = parse_index("zeta(-1,1,2)");
  for (auto _ : state) benchmark::DoNotOptimize(series::eval_accelerated(index));
}
BENCHMARK(BM_EvalAccelerated)->Unit(benchmark::kMillisecond);

void BM_MplHalf(benchmark::State& state) {
  PrecisionScope scope(static_cast<int>(state.range(0)));
  const std::vector<int> exps{3, 2, 1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(series::eval_mpl_half(exps));
}
BENCHMARK(BM_MplHalf)->Arg(128)->Arg(192)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_ClosedFormEval(benchmark::State& state) {
  const auto e = symbolic::closed_form(symbolic::Family::three_bar, {2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(symbolic::expr_eval(e));
}
BENCHMARK(BM_ClosedFormEval)->Unit(benchmark::kMicrosecond);

void BM_Quadrature(benchmark::State& state) {
  const auto spec = quadrature::IntegrandSpec::thm3_3(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(quadrature::integrate(spec));
}
BENCHMARK(BM_Quadrature)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
