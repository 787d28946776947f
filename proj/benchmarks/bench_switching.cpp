#include <benchmark/benchmark.h>

#include "gainsw/demos.hpp"
#include "gainsw/quaternions.hpp"
#include "gainsw/spectra.hpp"
#include "gainsw/switching.hpp"

using namespace gainsw;

static void BM_CheckGGm(benchmark::State& state) {
  const auto g = demos::t_graph();
  const auto alpha = demos::t_partition();
  for (auto _ : state) {
    auto r = check_g_gm(g, alpha);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CheckGGm);

static void BM_FourierRegular(benchmark::State& state) {
  const auto g = demos::d8_graph();
  const auto rep = regular_rep(g.group());
  const auto a = adjacency(g);
  for (auto _ : state) {
    auto m = fourier(rep, a);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_FourierRegular);

static void BM_RegularSpectrum(benchmark::State& state) {
  const auto g = demos::d8_graph();
  const auto m = fourier(regular_rep(g.group()), adjacency(g));
  for (auto _ : state) {
    auto s = hermitian_eigs(m);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_RegularSpectrum);

static void BM_CharPoly16(benchmark::State& state) {
  const auto g = demos::d8_graph();
  const auto m = fourier(dihedral2_rep(g.group()), adjacency(g));
  for (auto _ : state) {
    auto p = char_poly(m);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_CharPoly16);

static void BM_SwitchingIso(benchmark::State& state) {
  const auto g1 = demos::t_graph();
  const auto g2 = demos::t_switched();
  for (auto _ : state) {
    auto w = switching_isomorphic(g1, g2);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_SwitchingIso);

static void BM_RightSpectrum(benchmark::State& state) {
  const auto a = quat_adjacency(demos::quat_graph());
  for (auto _ : state) {
    auto s = right_spectrum(a);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_RightSpectrum);

BENCHMARK_MAIN();
