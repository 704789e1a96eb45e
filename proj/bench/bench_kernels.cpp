// serial reference vs OpenMP kernels
#include <benchmark/benchmark.h>

#include "canonica/brill_noether.hpp"
#include "canonica/canonical_model.hpp"
#include "canonica/kernels.hpp"

using namespace canonica;

namespace {

const NumericalSemigroup& sample() {
  static const auto s = parse_semigroup("gens:5,18,19,21");  // gamma 32
  return s;
}

std::vector<int> chart_exponents() { return CanonicalChart(sample()).exponents(); }

void BM_MonomialValuesSerial(benchmark::State& st) {
  const auto e = chart_exponents();
  for (auto _ : st) benchmark::DoNotOptimize(monomial_value_table_serial(e, static_cast<int>(st.range(0))));
}
void BM_MonomialValuesParallel(benchmark::State& st) {
  const auto e = chart_exponents();
  for (auto _ : st) benchmark::DoNotOptimize(monomial_value_table_parallel(e, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_MonomialValuesSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonomialValuesParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

// naive subset filter + serial sweep against up-set DFS + parallel sweep
void BM_ModelSearchReference(benchmark::State& st) {
  const auto s = kunz_family(static_cast<int>(st.range(0))).semigroup;
  const GapPoset poset(s);
  for (auto _ : st) {
    const auto deltas = closed_gap_sets_naive(poset);
    benchmark::DoNotOptimize(sweep_models_serial(s, poset, deltas));
  }
}
void BM_ModelSearchParallel(benchmark::State& st) {
  const auto s = kunz_family(static_cast<int>(st.range(0))).semigroup;
  const GapPoset poset(s);
  for (auto _ : st) {
    const auto deltas = closed_gap_sets(poset);
    benchmark::DoNotOptimize(sweep_models_parallel(s, poset, deltas));
  }
}
// alpha 4 and 5 have genus 6 and 11; the naive filter stops at genus 24
BENCHMARK(BM_ModelSearchReference)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModelSearchParallel)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
