// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------
//
// Data-parallel inner loops. Every kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::omp with identical
// results; the public module functions call the OpenMP versions. The serial
// variants are kept for testing and for the benchmark.

#pragma once

#include <vector>

#include "sddfrc/types.hpp"

namespace sddfrc {

class ColumnSolver;

namespace kernels {

/// Output of a batched norm-constrained least-squares solve.
struct ColumnBatch {
  CMatrix x;                   // N x L solutions
  std::vector<double> lambda;  // multiplier per column
  std::vector<char> active;    // norm constraint tight per column
};

namespace serial {

/// Sigma-delta modulation of each column of xbar into (x, q).
void modulate(const CMatrix& xbar, CMatrix& x, CMatrix& q);
/// power[i] += sum_l |A(:,i)^H X(:,l)|^2 (accumulating, unnormalized).
void accumulate_pattern(const CMatrix& steering, const CMatrix& X, RVector& power);
/// power[i] = Re(a_i^H C a_i).
void quadratic_pattern(const CMatrix& steering, const CMatrix& C, RVector& power);
ColumnBatch solve_columns(const ColumnSolver& solver, const CMatrix& B, double rho);

}  // namespace serial

namespace omp {

void modulate(const CMatrix& xbar, CMatrix& x, CMatrix& q);
void accumulate_pattern(const CMatrix& steering, const CMatrix& X, RVector& power);
void quadratic_pattern(const CMatrix& steering, const CMatrix& C, RVector& power);
ColumnBatch solve_columns(const ColumnSolver& solver, const CMatrix& B, double rho);

}  // namespace omp

/// Threads used by the omp kernels (honours SDDFRC_THREADS, else OpenMP default).
int worker_count();
/// Apply SDDFRC_THREADS to the OpenMP runtime if set. Called by the CLI.
void configure_workers_from_env();

}  // namespace kernels
}  // namespace sddfrc
