// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include <vector>

#include "sddfrc/array.hpp"
#include "sddfrc/sigma_delta.hpp"
#include "sddfrc/types.hpp"

namespace sddfrc {

/// Stacked least-squares system F = [sqrt(d) H; sqrt(1-d) I], B = [sqrt(d) S; sqrt(1-d) X_R].
///
/// ||F X - B||_F^2 equals d ||H X - S||_F^2 + (1-d) ||X - X_R||_F^2 for every X.
struct StackedSystem {
  CMatrix F;
  CMatrix B;
  double delta = 0.5;
  Eigen::Index users = 0;
};

StackedSystem build_system(const CMatrix& H, const CMatrix& S, const WaveformMatrix& radar,
                           double delta);

/// ||F X - B||_F^2.
double stacked_objective(const StackedSystem& sys, const CMatrix& X);

/// Closed-form minimizer F^+ B (F has full column rank by construction).
WaveformMatrix unconstrained_ls(const StackedSystem& sys);

/// Sign of the real and imaginary parts of every entry.
WaveformMatrix direct_quantize(const WaveformMatrix& X);

/// Scale X so that max(|Re|, |Im|) over the block equals 1. A zero block is returned unchanged.
WaveformMatrix normalize_amplitude(const WaveformMatrix& X);

/// Nearest boxed block: clamp real and imaginary parts of every entry to [-1, 1].
WaveformMatrix project_to_box(const WaveformMatrix& X);

struct ColumnSolveResult {
  CVector x;
  double lambda = 0.0;
  bool active = false;
};

/// Thin SVD of F shared by every column solve of min ||F x - b||^2 s.t. ||x||^2 <= rho.
///
/// With F = U diag(s) V^H and c = U^H b, the regularized solution is
/// x(lambda) = V diag(s / (s^2 + lambda)) c and ||x(lambda)||^2 is strictly
/// decreasing in lambda, so the multiplier is found by bisection.
class ColumnSolver {
 public:
  explicit ColumnSolver(const CMatrix& F);

  ColumnSolveResult solve(const Eigen::Ref<const CVector>& b, double rho) const;
  CVector solve_unconstrained(const Eigen::Ref<const CVector>& b) const;
  /// ||x(lambda)||^2 for the projected right-hand side c = U^H b.
  double secular_norm2(const CVector& c, double lambda) const;
  CVector project(const Eigen::Ref<const CVector>& b) const { return u_.adjoint() * b; }

  Eigen::Index unknowns() const { return v_.rows(); }
  Eigen::Index equations() const { return u_.rows(); }
  const RVector& singular_values() const { return s_; }

 private:
  CVector from_projection(const CVector& c, double lambda) const;

  CMatrix u_;
  CMatrix v_;
  RVector s_;
};

ColumnSolveResult constrained_ls_column(const CMatrix& F, const CVector& b, double rho);

struct SigmaDeltaDesign {
  WaveformMatrix xbar;          // pre-modulation block, columns with ||x||^2 <= rho
  ModulationRecord record;      // one-bit output and its quantization noise
  std::vector<double> lambdas;  // per-column multipliers
  Eigen::Index overloads = 0;   // noise entries outside the unit box
};

/// Per-column norm budget for the pre-modulation signal: 2N/9.
double sigma_delta_norm_budget(int n_antennas) noexcept;

/// Column-wise norm-constrained design with rho = 2N/9 followed by sigma-delta modulation.
SigmaDeltaDesign design_sd_dfrc(const StackedSystem& sys, const ArrayConfig& cfg);

}  // namespace sddfrc
