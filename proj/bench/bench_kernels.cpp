// SPDX-License-Identifier: Apache-2.0
//
// Serial reference kernels against their OpenMP counterparts.
// Worker count follows SDDFRC_THREADS.

#include <benchmark/benchmark.h>

#include "sddfrc/array.hpp"
#include "sddfrc/dfrc.hpp"
#include "sddfrc/kernels.hpp"
#include "sddfrc/rng.hpp"

using namespace sddfrc;

namespace {

CMatrix boxed(Eigen::Index n, Eigen::Index l, std::uint64_t seed) {
  Philox rng(seed);
  CMatrix m(n, l);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = cdouble(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return m;
}

template <void (*Kernel)(const CMatrix&, CMatrix&, CMatrix&)>
void BM_Modulate(benchmark::State& st) {
  const CMatrix xbar = boxed(st.range(0), 1024, 1);
  CMatrix x(xbar.rows(), xbar.cols()), q(xbar.rows(), xbar.cols());
  for (auto _ : st) {
    Kernel(xbar, x, q);
    benchmark::DoNotOptimize(x.data());
  }
  st.SetItemsProcessed(st.iterations() * xbar.size());
}

template <void (*Kernel)(const CMatrix&, const CMatrix&, RVector&)>
void BM_AccumulatePattern(benchmark::State& st) {
  const ArrayConfig cfg{static_cast<int>(st.range(0)), 0.125};
  const CMatrix A = steering_matrix(AngleGrid::uniform(-90, 90, 0.5).angles, cfg);
  const CMatrix X = boxed(cfg.n_antennas, 300, 2);
  RVector p = RVector::Zero(A.cols());
  for (auto _ : st) {
    Kernel(A, X, p);
    benchmark::DoNotOptimize(p.data());
  }
}

template <void (*Kernel)(const CMatrix&, const CMatrix&, RVector&)>
void BM_QuadraticPattern(benchmark::State& st) {
  const ArrayConfig cfg{static_cast<int>(st.range(0)), 0.125};
  const CMatrix A = steering_matrix(AngleGrid::uniform(-90, 90, 0.5).angles, cfg);
  const CMatrix G = boxed(cfg.n_antennas, cfg.n_antennas, 3);
  const CMatrix C = G * G.adjoint();
  RVector p = RVector::Zero(A.cols());
  for (auto _ : st) {
    p.setZero();
    Kernel(A, C, p);
    benchmark::DoNotOptimize(p.data());
  }
}

template <kernels::ColumnBatch (*Kernel)(const ColumnSolver&, const CMatrix&, double)>
void BM_SolveColumns(benchmark::State& st) {
  const Eigen::Index N = st.range(0);
  CMatrix F(N + 6, N);
  F << boxed(6, N, 4), CMatrix::Identity(N, N);
  const ColumnSolver solver(F);
  const CMatrix B = 3.0 * boxed(N + 6, 300, 5);
  for (auto _ : st) benchmark::DoNotOptimize(Kernel(solver, B, 2.0 * static_cast<double>(N) / 9.0));
}

}  // namespace

BENCHMARK(BM_Modulate<kernels::serial::modulate>)->Name("modulate/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_Modulate<kernels::omp::modulate>)->Name("modulate/omp")->Arg(64)->Arg(256)->UseRealTime();
BENCHMARK(BM_AccumulatePattern<kernels::serial::accumulate_pattern>)->Name("accumulate_pattern/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_AccumulatePattern<kernels::omp::accumulate_pattern>)->Name("accumulate_pattern/omp")->Arg(64)->Arg(256)->UseRealTime();
BENCHMARK(BM_QuadraticPattern<kernels::serial::quadratic_pattern>)->Name("quadratic_pattern/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_QuadraticPattern<kernels::omp::quadratic_pattern>)->Name("quadratic_pattern/omp")->Arg(64)->Arg(256)->UseRealTime();
BENCHMARK(BM_SolveColumns<kernels::serial::solve_columns>)->Name("solve_columns/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_SolveColumns<kernels::omp::solve_columns>)->Name("solve_columns/omp")->Arg(64)->Arg(256)->UseRealTime();

int main(int argc, char** argv) {
  kernels::configure_workers_from_env();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
