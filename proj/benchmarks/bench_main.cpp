#include <benchmark/benchmark.h>

#include "rees/cli/instance.hpp"
#include "rees/generators.hpp"
#include "rees/oracle.hpp"

using namespace rees;
using K = PrimeField;

namespace {

PresentationInput<K> random_input(int n, std::vector<int> d, std::uint64_t seed) {
  return cli::to_input(cli::random_instance(n, d, seed, FieldSpec::prime(kDefaultPrime)), K());
}

PresentationInput<K> final_example() {
  return PresentationInput<K>::parse(K(), {4, 7},
                                     {{"x0^4", "x1^7"}, {"x0^2*x1^2", "0"}, {"x1^4", "x0^7"}});
}

void BM_BuildLevel(benchmark::State& st) {
  auto in = random_input(3, {static_cast<int>(st.range(0)), 2 * static_cast<int>(st.range(0)) + 3}, 7);
  for (auto _ : st) benchmark::DoNotOptimize(build_level(in, 1));
}
BENCHMARK(BM_BuildLevel)->DenseRange(2, 6, 2);

void BM_Recursion(benchmark::State& st) {
  int d1 = static_cast<int>(st.range(0));
  auto in = random_input(3, {d1, 4 * d1}, 11);
  auto level = build_level(in, 1);
  auto g = sym_equations(in)[1];
  for (auto _ : st) benchmark::DoNotOptimize(recursion_generators(level, g));
}
BENCHMARK(BM_Recursion)->DenseRange(2, 4, 1);

void BM_SliceTrim(benchmark::State& st) {
  auto in = final_example();
  for (auto _ : st) benchmark::DoNotOptimize(trim_slice(slice_generators(in, 3), 3));
}
BENCHMARK(BM_SliceTrim)->Unit(benchmark::kMillisecond);

void BM_Saturation(benchmark::State& st) {
  auto in = final_example();
  auto J = buchberger(sym_equations(in));
  auto method = st.range(0) ? SaturationMethod::Rabinowitsch : SaturationMethod::IteratedColon;
  for (auto _ : st) benchmark::DoNotOptimize(saturate_m(J, method));
}
BENCHMARK(BM_Saturation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BidegreeTable(benchmark::State& st) {
  auto sigma = SigmaInvariants::from_sigma({3, 2});
  for (auto _ : st) benchmark::DoNotOptimize(bidegree_table({5, 16}, sigma));
}
BENCHMARK(BM_BidegreeTable);

}  // namespace
BENCHMARK_MAIN();
