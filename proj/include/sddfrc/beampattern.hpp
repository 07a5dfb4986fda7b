// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include "sddfrc/array.hpp"
#include "sddfrc/sigma_delta.hpp"
#include "sddfrc/types.hpp"

namespace sddfrc {

/// Transmit power per grid angle, linear scale.
struct Beampattern {
  AngleGrid grid;
  RVector power;
};

/// a^H C a at every grid angle. C must be Hermitian (relative tolerance 1e-9).
Beampattern analytic_pattern(const CMatrix& C, const AngleGrid& grid, const ArrayConfig& cfg);

/// (1/L) sum_l |a^H x_l|^2 at every grid angle.
Beampattern empirical_pattern(const CMatrix& X, const AngleGrid& grid, const ArrayConfig& cfg);

/// Running sum of |a^H x_l|^2 over several blocks, normalized on finish().
class PatternAccumulator {
 public:
  PatternAccumulator(const AngleGrid& grid, const ArrayConfig& cfg);

  void add(const CMatrix& X);
  /// Merge a partial sum (same grid); used to reduce per-trial results in a fixed order.
  void merge(const PatternAccumulator& other);
  Eigen::Index columns() const { return columns_; }
  Beampattern finish() const;

 private:
  AngleGrid grid_;
  CMatrix steering_;
  RVector sum_;
  Eigen::Index columns_ = 0;
};

/// Shaped quantization noise q - delayed(q) of a modulation record.
CMatrix shaped_noise(const ModulationRecord& rec);

/// D(theta) = (8 (N - 1) / 3) sin^2(pi (d / lambda) sin theta).
double quantization_noise_power(double theta_deg, const ArrayConfig& cfg);
Beampattern quantization_noise_pattern(const AngleGrid& grid, const ArrayConfig& cfg);

/// Floor reported for an exactly zero error.
inline constexpr double kMseFloorDb = -300.0;

/// 10 log10 of the mean squared difference between two patterns on the same grid.
double pattern_mse_db(const Beampattern& p, const Beampattern& reference);

/// 10 log10(power), clamped at kMseFloorDb for non-positive values.
double to_db(double power) noexcept;

}  // namespace sddfrc
