// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#include "sddfrc/array.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sddfrc/errors.hpp"

namespace sddfrc {

void ArrayConfig::validate() const {
  if (n_antennas < 2) throw ContractError("ArrayConfig: n_antennas must be >= 2");
  if (!(spacing_ratio > 0.0 && spacing_ratio <= 0.5))
    throw ContractError("ArrayConfig: spacing_ratio must lie in (0, 0.5]");
}

void AngleGrid::validate() const {
  if (mainlobe.size() != angles.size() || sidelobe.size() != angles.size())
    throw ContractError("AngleGrid: mask length differs from angle count");
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!(angles[i] >= -90.0 && angles[i] <= 90.0))
      throw ContractError("AngleGrid: angle outside [-90, 90]");
    if (i > 0 && !(angles[i] > angles[i - 1]))
      throw ContractError("AngleGrid: angles must be strictly increasing");
    if (mainlobe[i] && sidelobe[i])
      throw ContractError("AngleGrid: mainlobe and sidelobe overlap at " + std::to_string(angles[i]));
  }
}

AngleGrid AngleGrid::uniform(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw ContractError("AngleGrid::uniform: bad range or step");
  AngleGrid g;
  // Integer lattice avoids accumulated rounding: angle_i = lo + i * step.
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  g.angles.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) g.angles.push_back(lo + static_cast<double>(i) * step);
  g.mainlobe.assign(g.angles.size(), false);
  g.sidelobe.assign(g.angles.size(), false);
  g.validate();
  return g;
}

AngleGrid AngleGrid::with_regions(double lo, double hi, double step,
                                  const std::vector<std::pair<double, double>>& mainlobe,
                                  const std::vector<std::pair<double, double>>& sidelobe) {
  AngleGrid g = uniform(lo, hi, step);
  constexpr double eps = 1e-9;
  auto inside = [&](double a, const std::vector<std::pair<double, double>>& regions) {
    for (const auto& [l, h] : regions)
      if (a >= l - eps && a <= h + eps) return true;
    return false;
  };
  for (std::size_t i = 0; i < g.size(); ++i) {
    g.mainlobe[i] = inside(g.angles[i], mainlobe);
    g.sidelobe[i] = inside(g.angles[i], sidelobe);
  }
  g.validate();
  return g;
}

std::vector<double> AngleGrid::mainlobe_angles() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (mainlobe[i]) out.push_back(angles[i]);
  return out;
}

std::vector<double> AngleGrid::sidelobe_angles() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (sidelobe[i]) out.push_back(angles[i]);
  return out;
}

double deg2rad(double deg) noexcept { return deg * std::numbers::pi / 180.0; }

double spatial_frequency(double theta_deg, const ArrayConfig& cfg) {
  if (!(theta_deg >= -90.0 && theta_deg <= 90.0))
    throw DomainError("spatial_frequency: theta must lie in [-90, 90] degrees");
  return 2.0 * std::numbers::pi * cfg.spacing_ratio * std::sin(deg2rad(theta_deg));
}

CVector steering_vector(double theta_deg, const ArrayConfig& cfg) {
  cfg.validate();
  const double w = spatial_frequency(theta_deg, cfg);
  CVector a(cfg.n_antennas);
  a(0) = 1.0;
  for (int n = 1; n < cfg.n_antennas; ++n) a(n) = std::polar(1.0, w * n);
  return a;
}

CMatrix steering_matrix(const std::vector<double>& angles_deg, const ArrayConfig& cfg) {
  CMatrix A(cfg.n_antennas, static_cast<Eigen::Index>(angles_deg.size()));
  for (std::size_t i = 0; i < angles_deg.size(); ++i)
    A.col(static_cast<Eigen::Index>(i)) = steering_vector(angles_deg[i], cfg);
  return A;
}

}  // namespace sddfrc
