// Copyright 2026 The qes authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <complex>

#include "qes/asymptotic.hpp"
#include "qes/magyari.hpp"
#include "qes/oracle.hpp"
#include "qes/solver.hpp"

namespace {

using qes::Complex128;
using qes::MagyariSystem;
using C = std::complex<double>;

void BM_Assemble(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  MagyariSystem<double> sys(N, 1.25, 0.5, -0.3);
  const C E(0.7, -0.2), F(1.1, 0.4);
  for (auto _ : state) {
    auto m = qes::assemble(sys, E, F);
    benchmark::DoNotOptimize(m);
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_Assemble)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_ForwardEliminate(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  MagyariSystem<double> sys(N, 1.25, 0.5, -0.3);
  const C E(0.7, -0.2), F(1.1, 0.4);
  for (auto _ : state) {
    auto r = qes::forward_eliminate(sys, E, F, 64);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_ForwardEliminate)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_ForwardEliminateQuad(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  MagyariSystem<qes::Float128> sys(N, qes::Float128(1.25), qes::Float128(0.5),
                                   qes::Float128(-0.3));
  const Complex128 E(qes::Float128(0.7), qes::Float128(-0.2));
  const Complex128 F(qes::Float128(1.1), qes::Float128(0.4));
  for (auto _ : state) {
    auto r = qes::forward_eliminate(sys, E, F, 128);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ForwardEliminateQuad)->RangeMultiplier(2)->Range(4, 32);

void BM_PivotedKernel(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  MagyariSystem<double> sys(N, 1.25, 0.5, -0.3);
  const C E(0.7, -0.2), F(1.1, 0.4);
  for (auto _ : state) {
    auto k = qes::pivoted_kernel(sys, E, F, 64);
    benchmark::DoNotOptimize(k);
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_PivotedKernel)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_NewtonPolishN2(benchmark::State& state) {
  qes::InternalParameters ip;
  ip.ell = qes::Rational(5, 2);
  ip.beta = qes::Rational(1, 2);
  ip.gamma = qes::Rational(1, 3);
  const auto seed = qes::asymptotic_spectrum<double>(2, 0, 2.5, 0.5, 1.0 / 3.0);
  for (auto _ : state) {
    auto r = qes::newton_polish(ip, 2, qes::Complex256(seed.first), qes::Complex256(seed.second));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_NewtonPolishN2);

void BM_Multiplets(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ms = qes::multiplets(N);
    benchmark::DoNotOptimize(ms);
  }
}
BENCHMARK(BM_Multiplets)->Arg(8)->Arg(32)->Arg(64);

void BM_RescaledRootScan(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto scan = qes::rescaled_root_scan(N);
    benchmark::DoNotOptimize(scan);
  }
}
BENCHMARK(BM_RescaledRootScan)->DenseRange(2, 8, 2);

void BM_SolveAllScanN3(benchmark::State& state) {
  qes::InternalParameters ip;
  ip.ell = qes::Rational(3, 2);
  ip.beta = qes::Rational(1);
  ip.gamma = qes::Rational(-1, 2);
  for (auto _ : state) {
    auto rep = qes::solve_all(ip, 3, {});
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_SolveAllScanN3);

}  // namespace

BENCHMARK_MAIN();
