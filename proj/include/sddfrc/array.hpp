// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include <vector>

#include "sddfrc/types.hpp"

namespace sddfrc {

/// Uniform linear array geometry. spacing_ratio is d / lambda.
struct ArrayConfig {
  int n_antennas = 64;
  double spacing_ratio = 0.125;

  /// Throws ContractError unless n_antennas >= 2 and 0 < spacing_ratio <= 0.5.
  void validate() const;
};

/// Ordered angle grid in degrees with disjoint mainlobe / sidelobe masks.
struct AngleGrid {
  std::vector<double> angles;
  std::vector<bool> mainlobe;
  std::vector<bool> sidelobe;

  std::size_t size() const noexcept { return angles.size(); }
  void validate() const;

  /// Uniform grid lo, lo + step, ..., hi (hi included when it lands on the lattice).
  static AngleGrid uniform(double lo, double hi, double step);
  /// Uniform grid with masks set from closed intervals [lo, hi].
  static AngleGrid with_regions(double lo, double hi, double step,
                                const std::vector<std::pair<double, double>>& mainlobe,
                                const std::vector<std::pair<double, double>>& sidelobe);

  std::vector<double> mainlobe_angles() const;
  std::vector<double> sidelobe_angles() const;
};

// Angles are accepted on the closed interval [-90, 90]; the endpoints are
// covered by continuity of the steering vector.
double spatial_frequency(double theta_deg, const ArrayConfig& cfg);
CVector steering_vector(double theta_deg, const ArrayConfig& cfg);
/// N x |angles| matrix whose columns are steering vectors.
CMatrix steering_matrix(const std::vector<double>& angles_deg, const ArrayConfig& cfg);

double deg2rad(double deg) noexcept;

}  // namespace sddfrc
