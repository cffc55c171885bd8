#include <benchmark/benchmark.h>

#include <random>

#include "vwave/harness.hpp"
#include "vwave/schemes_1d.hpp"
#include "vwave/schemes_2d.hpp"
#include "vwave/time_integration.hpp"

using namespace vwave;

namespace {

template <class S>
S random_state(std::size_t n) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  S s(n);
  for (auto& x : s.flat()) x = dist(rng);
  return s;
}

Setup1D setup_1d(benchmark::State& state) {
  return Setup1D{GridSpec1D{-15, 15, static_cast<int>(state.range(0)), Boundary::periodic},
                 Material{0.5, 4.5}, {}};
}

template <class S, class Fn>
void run_1d(benchmark::State& state, Fn rhs) {
  const auto setup = setup_1d(state);
  const auto st = random_state<S>(setup.grid.size());
  for (auto _ : state) benchmark::DoNotOptimize(rhs(st, setup));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_vw_cons(benchmark::State& s) {
  run_1d<StateVW>(s, [](const StateVW& st, const Setup1D& su) { return rhs_vw_conservative(st, su); });
}
void BM_vw_diss(benchmark::State& s) {
  run_1d<StateVW>(s, [](const StateVW& st, const Setup1D& su) { return rhs_vw_dissipative(st, su); });
}
void BM_rs_cons(benchmark::State& s) {
  run_1d<StateRS>(s, [](const StateRS& st, const Setup1D& su) { return rhs_rs_conservative(st, su); });
}
void BM_rs_diss(benchmark::State& s) {
  run_1d<StateRS>(s, [](const StateRS& st, const Setup1D& su) { return rhs_rs_dissipative(st, su); });
}
void BM_ham(benchmark::State& s) {
  run_1d<StateHam>(s, [](const StateHam& st, const Setup1D& su) { return rhs_hamiltonian(st, su); });
}

void BM_ssprk3_vw_diss(benchmark::State& state) {
  const auto setup = setup_1d(state);
  const auto st = random_state<StateVW>(setup.grid.size());
  auto rhs = [&](const StateVW& s) { return rhs_vw_dissipative(s, setup); };
  for (auto _ : state) benchmark::DoNotOptimize(ssprk3_step(st, rhs, 1e-4));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Dissipative>
void BM_2d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Setup2D setup{GridSpec2D{0, 1, 0, 1, n, n}, Material{0.5, 1.5}};
  const auto st = random_state<State2D>(setup.grid.size());
  for (auto _ : state) {
    if constexpr (Dissipative) {
      benchmark::DoNotOptimize(rhs_2d_dissipative(st, setup));
    } else {
      benchmark::DoNotOptimize(rhs_2d_conservative(st, setup));
    }
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}

}  // namespace

BENCHMARK(BM_vw_cons)->Arg(480)->Arg(15360);
BENCHMARK(BM_vw_diss)->Arg(480)->Arg(15360);
BENCHMARK(BM_rs_cons)->Arg(480)->Arg(15360);
BENCHMARK(BM_rs_diss)->Arg(480)->Arg(15360);
BENCHMARK(BM_ham)->Arg(480)->Arg(15360);
BENCHMARK(BM_ssprk3_vw_diss)->Arg(15360);
BENCHMARK(BM_2d<false>)->Arg(64)->Arg(256);
BENCHMARK(BM_2d<true>)->Arg(64)->Arg(256);
int main(int argc, char** argv) {
  tune_allocator();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
