// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#include "sddfrc/beampattern.hpp"

#include <cmath>
#include <numbers>

#include "sddfrc/errors.hpp"
#include "sddfrc/kernels.hpp"

namespace sddfrc {

Beampattern analytic_pattern(const CMatrix& C, const AngleGrid& grid, const ArrayConfig& cfg) {
  cfg.validate();
  if (C.rows() != cfg.n_antennas || C.cols() != cfg.n_antennas)
    throw ContractError("analytic_pattern: covariance must be N x N");
  const double scale = std::max(1.0, C.cwiseAbs().maxCoeff());
  if ((C - C.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw ContractError("analytic_pattern: covariance is not Hermitian");
  Beampattern out{grid, RVector::Zero(static_cast<Eigen::Index>(grid.size()))};
  kernels::omp::quadratic_pattern(steering_matrix(grid.angles, cfg), C, out.power);
  return out;
}

PatternAccumulator::PatternAccumulator(const AngleGrid& grid, const ArrayConfig& cfg)
    : grid_(grid),
      steering_(steering_matrix(grid.angles, cfg)),
      sum_(RVector::Zero(static_cast<Eigen::Index>(grid.size()))) {}

void PatternAccumulator::add(const CMatrix& X) {
  kernels::omp::accumulate_pattern(steering_, X, sum_);
  columns_ += X.cols();
}

void PatternAccumulator::merge(const PatternAccumulator& other) {
  if (other.sum_.size() != sum_.size()) throw ContractError("PatternAccumulator::merge: grid mismatch");
  sum_ += other.sum_;
  columns_ += other.columns_;
}

Beampattern PatternAccumulator::finish() const {
  if (columns_ == 0) throw ContractError("PatternAccumulator: no columns accumulated");
  return {grid_, sum_ / static_cast<double>(columns_)};
}

Beampattern empirical_pattern(const CMatrix& X, const AngleGrid& grid, const ArrayConfig& cfg) {
  if (X.cols() == 0 || X.rows() == 0) throw ContractError("empirical_pattern: empty signal block");
  if (X.rows() != cfg.n_antennas) throw ContractError("empirical_pattern: row count differs from array size");
  PatternAccumulator acc(grid, cfg);
  acc.add(X);
  return acc.finish();
}

CMatrix shaped_noise(const ModulationRecord& rec) { return rec.noise - delayed(rec.noise); }

double quantization_noise_power(double theta_deg, const ArrayConfig& cfg) {
  const double s = std::sin(std::numbers::pi * cfg.spacing_ratio * std::sin(deg2rad(theta_deg)));
  return 8.0 * (cfg.n_antennas - 1) / 3.0 * s * s;
}

Beampattern quantization_noise_pattern(const AngleGrid& grid, const ArrayConfig& cfg) {
  cfg.validate();
  Beampattern out{grid, RVector(static_cast<Eigen::Index>(grid.size()))};
  for (std::size_t i = 0; i < grid.size(); ++i)
    out.power(static_cast<Eigen::Index>(i)) = quantization_noise_power(grid.angles[i], cfg);
  return out;
}

double pattern_mse_db(const Beampattern& p, const Beampattern& reference) {
  if (p.grid.angles != reference.grid.angles || p.power.size() != reference.power.size())
    throw ContractError("pattern_mse_db: patterns are on different grids");
  if (p.power.size() == 0) throw ContractError("pattern_mse_db: empty grid");
  const double mse = (p.power - reference.power).squaredNorm() / static_cast<double>(p.power.size());
  return to_db(mse);
}

double to_db(double power) noexcept {
  if (!(power > 0.0)) return kMseFloorDb;
  return std::max(kMseFloorDb, 10.0 * std::log10(power));
}

}  // namespace sddfrc
