// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#include "sddfrc/kernels.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sddfrc/dfrc.hpp"
#include "sddfrc/errors.hpp"
#include "sddfrc/sigma_delta.hpp"

namespace sddfrc::kernels {

namespace {

void check_pattern_shapes(const CMatrix& steering, const CMatrix& X, const RVector& power) {
  if (steering.rows() != X.rows())
    throw ContractError("pattern kernel: steering rows differ from signal rows");
  if (power.size() != steering.cols())
    throw ContractError("pattern kernel: power length differs from angle count");
}

inline double pattern_at(const CMatrix& steering, const CMatrix& X, Eigen::Index i) {
  double acc = 0.0;
  for (Eigen::Index l = 0; l < X.cols(); ++l) acc += std::norm(steering.col(i).dot(X.col(l)));
  return acc;
}

void fill_column(const ColumnSolver& solver, const CMatrix& B, double rho, Eigen::Index l,
                 ColumnBatch& out) {
  auto r = solver.solve(B.col(l), rho);
  out.x.col(l) = r.x;
  out.lambda[static_cast<std::size_t>(l)] = r.lambda;
  out.active[static_cast<std::size_t>(l)] = r.active ? 1 : 0;
}

ColumnBatch make_batch(const ColumnSolver& solver, const CMatrix& B) {
  if (B.rows() != solver.equations())
    throw ContractError("solve_columns: right-hand side rows differ from system rows");
  ColumnBatch out;
  out.x.resize(solver.unknowns(), B.cols());
  out.lambda.assign(static_cast<std::size_t>(B.cols()), 0.0);
  out.active.assign(static_cast<std::size_t>(B.cols()), 0);
  return out;
}

}  // namespace

namespace serial {

void modulate(const CMatrix& xbar, CMatrix& x, CMatrix& q) {
  x.resize(xbar.rows(), xbar.cols());
  q.resize(xbar.rows(), xbar.cols());
  for (Eigen::Index l = 0; l < xbar.cols(); ++l) modulate_column(xbar.col(l), x.col(l), q.col(l));
}

void accumulate_pattern(const CMatrix& steering, const CMatrix& X, RVector& power) {
  check_pattern_shapes(steering, X, power);
  for (Eigen::Index i = 0; i < steering.cols(); ++i) power(i) += pattern_at(steering, X, i);
}

void quadratic_pattern(const CMatrix& steering, const CMatrix& C, RVector& power) {
  check_pattern_shapes(steering, C, power);
  for (Eigen::Index i = 0; i < steering.cols(); ++i)
    power(i) = steering.col(i).dot(C * steering.col(i)).real();
}

ColumnBatch solve_columns(const ColumnSolver& solver, const CMatrix& B, double rho) {
  ColumnBatch out = make_batch(solver, B);
  for (Eigen::Index l = 0; l < B.cols(); ++l) fill_column(solver, B, rho, l, out);
  return out;
}

}  // namespace serial

namespace omp {

void modulate(const CMatrix& xbar, CMatrix& x, CMatrix& q) {
  x.resize(xbar.rows(), xbar.cols());
  q.resize(xbar.rows(), xbar.cols());
  const Eigen::Index L = xbar.cols();
#pragma omp parallel for schedule(static)
  for (Eigen::Index l = 0; l < L; ++l) modulate_column(xbar.col(l), x.col(l), q.col(l));
}

void accumulate_pattern(const CMatrix& steering, const CMatrix& X, RVector& power) {
  check_pattern_shapes(steering, X, power);
  // Each angle is reduced over columns in the same order as the serial kernel.
  const Eigen::Index G = steering.cols();
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < G; ++i) power(i) += pattern_at(steering, X, i);
}

void quadratic_pattern(const CMatrix& steering, const CMatrix& C, RVector& power) {
  check_pattern_shapes(steering, C, power);
  const Eigen::Index G = steering.cols();
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < G; ++i) power(i) = steering.col(i).dot(C * steering.col(i)).real();
}

ColumnBatch solve_columns(const ColumnSolver& solver, const CMatrix& B, double rho) {
  ColumnBatch out = make_batch(solver, B);
  const Eigen::Index L = B.cols();
#pragma omp parallel for schedule(static)
  for (Eigen::Index l = 0; l < L; ++l) fill_column(solver, B, rho, l, out);
  return out;
}

}  // namespace omp

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void configure_workers_from_env() {
  const char* env = std::getenv("SDDFRC_THREADS");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || n < 1)
    throw ContractError(std::string("SDDFRC_THREADS must be a positive integer, got '") + env + "'");
#ifdef _OPENMP
  omp_set_num_threads(static_cast<int>(n));
#endif
}

}  // namespace sddfrc::kernels
