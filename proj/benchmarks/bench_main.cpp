#include <benchmark/benchmark.h>

#include <ipc/complex.hpp>
#include <ipc/hyperplane.hpp>
#include <ipc/ideal.hpp>
#include <ipc/piercing.hpp>
#include <ipc/toric.hpp>

#include <vector>

namespace {

const std::vector<ipc::PiercedCode>& codes(int n, int k) {
  static std::vector<ipc::PiercedCode> cache[6][4];
  auto& v = cache[n][k];
  if (v.empty()) v = ipc::enumerate_pierced_codes(n, k);
  return v;
}

void BM_Enumerate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ipc::enumerate_pierced_codes(n, 2));
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Shelling(benchmark::State& state) {
  const auto& all = codes(static_cast<int>(state.range(0)), 2);
  for (auto _ : state)
    for (const auto& pc : all) {
      auto order = ipc::shelling_order(pc.code);
      benchmark::DoNotOptimize(ipc::verify_shelling(ipc::polar_complex_of(pc.code).complex(), order).ok);
    }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_Shelling)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto& all = codes(static_cast<int>(state.range(0)), 2);
  for (auto _ : state)
    for (const auto& pc : all) benchmark::DoNotOptimize(ipc::cf_max_degree(pc.code));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Buchberger(benchmark::State& state) {
  const auto& all = codes(static_cast<int>(state.range(0)), 2);
  for (auto _ : state)
    for (const auto& pc : all) {
      ipc::ToricIdeal t(pc.code);
      benchmark::DoNotOptimize(t.groebner_basis(t.codeword_lex()).size());
    }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_Buchberger)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_HyperplaneBuild(benchmark::State& state) {
  const auto& all = codes(static_cast<int>(state.range(0)), 3);
  for (auto _ : state)
    for (const auto& pc : all) benchmark::DoNotOptimize(ipc::build_hyperplane_realization(pc.sequence));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(all.size()));
}
BENCHMARK(BM_HyperplaneBuild)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
