#include <benchmark/benchmark.h>

#include "vclass/coaisle.hpp"
#include "vclass/fixtures.hpp"

using namespace vclass;

namespace {

Spectrum idempotent_chain(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(i == 0 ? "0" : i + 1 == k ? "m" : "p" + std::to_string(i));
  return Spectrum::finite_chain(names, std::vector<bool>(k, true));
}

void BM_AllSystems(benchmark::State& st) {
  auto s = idempotent_chain(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(all_systems(s).size());
}
BENCHMARK(BM_AllSystems)->DenseRange(2, 6);

void BM_CountFiltrations(benchmark::State& st) {
  auto s = idempotent_chain(4);
  int len = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count_filtrations(s, 0, len - 1));
}
BENCHMARK(BM_CountFiltrations)->DenseRange(1, 4);

void BM_SystemRoundtrip(benchmark::State& st) {
  auto s = idempotent_chain(static_cast<int>(st.range(0)));
  auto xs = all_systems(s);
  for (auto _ : st)
    for (auto& x : xs) {
      auto y = recover_system([&](const UniserialModule& m) { return uniserial_in_class(x, m); }, s);
      benchmark::DoNotOptimize(y.atoms().size());
    }
  st.SetItemsProcessed(static_cast<int64_t>(st.iterations() * xs.size()));
}
BENCHMARK(BM_SystemRoundtrip)->DenseRange(2, 4);

void BM_TorDescription(benchmark::State& st) {
  auto s = idempotent_chain(4);
  auto xs = all_systems(s);
  for (auto _ : st)
    for (auto& x : xs) benchmark::DoNotOptimize(class_equals_tor_description(x).mismatches);
}
BENCHMARK(BM_TorDescription);

void BM_ClassifyFixture(benchmark::State& st) {
  auto names = fixture_names();
  auto f = make_fixture(names[static_cast<std::size_t>(st.range(0))]).filtration;
  st.SetLabel(names[static_cast<std::size_t>(st.range(0))]);
  for (auto _ : st) benchmark::DoNotOptimize(classify(f).generators.size());
}
BENCHMARK(BM_ClassifyFixture)->DenseRange(0, 5);

void BM_ValidateEx0(benchmark::State& st) {
  auto f = make_fixture("ex0").filtration;
  for (auto _ : st) benchmark::DoNotOptimize(validate_filtration(f).ok);
}
BENCHMARK(BM_ValidateEx0);

void BM_XiVocabulary(benchmark::State& st) {
  auto s = idempotent_chain(4);
  AdmissibleFiltration f(s, 0, {AdmissibleSystem(s, {{s.zero(), s.zero()}}), AdmissibleSystem(s, {{s.zero(), s.top()}})});
  auto mods = uniserial_vocabulary(s);
  for (auto _ : st)
    for (auto& m : mods) benchmark::DoNotOptimize(xi_membership_homological(f, 0, m));
  st.SetItemsProcessed(static_cast<int64_t>(st.iterations() * mods.size()));
}
BENCHMARK(BM_XiVocabulary);

}  // namespace
BENCHMARK_MAIN();
