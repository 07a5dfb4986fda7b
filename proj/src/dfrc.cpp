// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#include "sddfrc/dfrc.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sddfrc/errors.hpp"
#include "sddfrc/kernels.hpp"

namespace sddfrc {

StackedSystem build_system(const CMatrix& H, const CMatrix& S, const WaveformMatrix& radar,
                           double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw ContractError("build_system: delta must lie in (0, 1)");
  const CMatrix& XR = radar.entries;
  const Eigen::Index N = XR.rows();
  const Eigen::Index L = XR.cols();
  const Eigen::Index K = H.rows();
  if (K > 0 && H.cols() != N)
    throw ContractError("build_system: channel has " + std::to_string(H.cols()) +
                        " columns, radar block has " + std::to_string(N) + " antennas");
  if (S.rows() != K || (K > 0 && S.cols() != L))
    throw ContractError("build_system: symbol matrix must be K x L");

  const double wc = std::sqrt(delta);
  const double wr = std::sqrt(1.0 - delta);
  StackedSystem sys;
  sys.delta = delta;
  sys.users = K;
  sys.F.resize(K + N, N);
  sys.B.resize(K + N, L);
  if (K > 0) {
    sys.F.topRows(K) = wc * H;
    sys.B.topRows(K) = wc * S;
  }
  sys.F.bottomRows(N) = wr * CMatrix::Identity(N, N);
  sys.B.bottomRows(N) = wr * XR;
  return sys;
}

double stacked_objective(const StackedSystem& sys, const CMatrix& X) {
  return (sys.F * X - sys.B).squaredNorm();
}

WaveformMatrix unconstrained_ls(const StackedSystem& sys) {
  const ColumnSolver solver(sys.F);
  WaveformMatrix out;
  out.entries.resize(sys.F.cols(), sys.B.cols());
  for (Eigen::Index l = 0; l < sys.B.cols(); ++l)
    out.entries.col(l) = solver.solve_unconstrained(sys.B.col(l));
  return out;
}

WaveformMatrix direct_quantize(const WaveformMatrix& X) {
  WaveformMatrix out;
  out.domain = SignalDomain::one_bit;
  out.entries = X.entries.unaryExpr([](cdouble v) { return quantize(v); });
  return out;
}

WaveformMatrix normalize_amplitude(const WaveformMatrix& X) {
  double peak = 0.0;
  for (Eigen::Index i = 0; i < X.entries.size(); ++i) {
    const auto v = X.entries.data()[i];
    peak = std::max({peak, std::abs(v.real()), std::abs(v.imag())});
  }
  WaveformMatrix out = X;
  if (peak > 0.0) out.entries /= peak;
  out.domain = SignalDomain::boxed;
  return out;
}

WaveformMatrix project_to_box(const WaveformMatrix& X) {
  WaveformMatrix out = X;
  out.entries = X.entries.unaryExpr([](cdouble v) {
    return cdouble(std::clamp(v.real(), -1.0, 1.0), std::clamp(v.imag(), -1.0, 1.0));
  });
  out.domain = SignalDomain::boxed;
  return out;
}

ColumnSolver::ColumnSolver(const CMatrix& F) {
  if (F.rows() < F.cols()) throw ContractError("ColumnSolver: F must have at least as many rows as columns");
  Eigen::BDCSVD<CMatrix> svd(F, Eigen::ComputeThinU | Eigen::ComputeThinV);
  u_ = svd.matrixU();
  v_ = svd.matrixV();
  s_ = svd.singularValues();
  if (s_.size() == 0 || !(s_(s_.size() - 1) > 0.0))
    throw ContractError("ColumnSolver: F is rank deficient");
}

CVector ColumnSolver::from_projection(const CVector& c, double lambda) const {
  CVector w(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) w(i) = c(i) * (s_(i) / (s_(i) * s_(i) + lambda));
  return v_ * w;
}

double ColumnSolver::secular_norm2(const CVector& c, double lambda) const {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    const double g = s_(i) / (s_(i) * s_(i) + lambda);
    acc += g * g * std::norm(c(i));
  }
  return acc;
}

CVector ColumnSolver::solve_unconstrained(const Eigen::Ref<const CVector>& b) const {
  return from_projection(project(b), 0.0);
}

ColumnSolveResult ColumnSolver::solve(const Eigen::Ref<const CVector>& b, double rho) const {
  if (!(rho > 0.0)) throw ContractError("ColumnSolver::solve: rho must be positive");
  const CVector c = project(b);
  ColumnSolveResult res;
  if (secular_norm2(c, 0.0) <= rho) {
    res.x = from_projection(c, 0.0);
    return res;
  }
  // ||F^H b|| / sqrt(rho) bounds the root: there ||x|| <= ||F^H b|| / lambda = sqrt(rho).
  double lo = 0.0;
  double hi = (s_.cwiseProduct(c.cwiseAbs())).norm() / std::sqrt(rho);
  if (!(secular_norm2(c, hi) <= rho)) throw std::logic_error("ColumnSolver: bisection bracket failure");
  // Bisect to floating-point resolution and keep the feasible end of the bracket.
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (secular_norm2(c, mid) > rho)
      lo = mid;
    else
      hi = mid;
  }
  const double mid = hi;
  res.lambda = mid;
  res.active = true;
  res.x = from_projection(c, mid);
  return res;
}

ColumnSolveResult constrained_ls_column(const CMatrix& F, const CVector& b, double rho) {
  if (b.size() != F.rows()) throw ContractError("constrained_ls_column: b length differs from F rows");
  return ColumnSolver(F).solve(b, rho);
}

double sigma_delta_norm_budget(int n_antennas) noexcept { return 2.0 * n_antennas / 9.0; }

SigmaDeltaDesign design_sd_dfrc(const StackedSystem& sys, const ArrayConfig& cfg) {
  if (sys.F.cols() != cfg.n_antennas)
    throw ContractError("design_sd_dfrc: system size differs from the array");
  const ColumnSolver solver(sys.F);
  auto batch = kernels::omp::solve_columns(solver, sys.B, sigma_delta_norm_budget(cfg.n_antennas));
  SigmaDeltaDesign out;
  out.xbar.entries = std::move(batch.x);
  out.xbar.domain = SignalDomain::free;
  out.lambdas = std::move(batch.lambda);
  out.record = modulate(out.xbar, cfg.n_antennas);
  out.overloads = out.record.overload_count();
  return out;
}

}  // namespace sddfrc
