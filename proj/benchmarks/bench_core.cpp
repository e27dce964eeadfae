#include <benchmark/benchmark.h>

#include <random>

#include "pgv/catalog.hpp"
#include "pgv/cohomology.hpp"
#include "pgv/extensions.hpp"
#include "pgv/noninner.hpp"

using namespace pgv;

namespace {

GroupPtr builtin(const std::string& name) { return entry_group(*find_entry(builtin_catalog(), name)); }

const char* const kGroups[] = {"D8", "Q16", "He27", "D8xC2xC2", "MaxClass81b"};

void BM_Rref(benchmark::State& state) {
  const std::size_t n = std::size_t(state.range(0));
  std::mt19937_64 rng(1);
  FpMatrix m(3, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Residue(rng() % 3);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_Rref)->Arg(32)->Arg(128)->Arg(512);

void BM_H1Regular(benchmark::State& state) {
  GroupPtr g = builtin(kGroups[state.range(0)]);
  FreeBimodule fb(g, 1);
  ModulePtr j = restrict_module(make_submodule(fb.right_module(), radical(*fb.right_module())));
  state.SetLabel(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(j, 1).h_dim);
}
BENCHMARK(BM_H1Regular)->DenseRange(0, 2);

void BM_H2Trivial(benchmark::State& state) {
  GroupPtr g = builtin(kGroups[state.range(0)]);
  ModulePtr m = GModule::trivial(g, 1);
  state.SetLabel(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(m, 2).h_dim);
}
BENCHMARK(BM_H2Trivial)->DenseRange(0, 2);

void BM_BuildExtension(benchmark::State& state) {
  GroupPtr g = builtin(kGroups[state.range(0)]);
  ModulePtr m = GModule::trivial(g, 1);
  CohomologySpace h = cohomology(m, 2);
  TwoCocycle f{m, h.h_reps.front()};
  state.SetLabel(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(build_extension(f).group->order());
}
BENCHMARK(BM_BuildExtension)->DenseRange(0, 2);

void BM_Annihilator(benchmark::State& state) {
  GroupPtr g = builtin("Q16");
  FreeBimodule fb(g, std::size_t(state.range(0)));
  Submodule q = make_submodule(fb.right_module(), radical_power(*fb.right_module(), 2));
  for (auto _ : state) benchmark::DoNotOptimize(annihilator(fb, q, AnnSide::LeftOfRight).dim());
}
BENCHMARK(BM_Annihilator)->Arg(1)->Arg(2);

void BM_EngineSweep(benchmark::State& state) {
  GroupPtr g = builtin(kGroups[state.range(0)]);
  state.SetLabel(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(engine_sweep(g).has_value());
}
BENCHMARK(BM_EngineSweep)->DenseRange(0, 4);

void BM_BruteForceAutomorphisms(benchmark::State& state) {
  GroupPtr g = builtin("Q16");
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_order_p_noninner(*g).automorphisms);
}
BENCHMARK(BM_BruteForceAutomorphisms);

}  // namespace
BENCHMARK_MAIN();
