// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sddfrc/array.hpp"
#include "sddfrc/beampattern.hpp"
#include "sddfrc/errors.hpp"
#include "sddfrc/types.hpp"

namespace sddfrc {

/// Beampattern design problem:
///
///   max tau  s.t.  P(theta0) - P(theta) >= tau                       theta in sidelobe
///                  (1-eps) P(theta0) <= P(theta) <= (1+eps) P(theta0)  theta in mainlobe
///                  C_nn <= p,  C >= 0,  tau >= 0
///
/// with P(theta) = a^H C a + D(theta) when a noise offset D is supplied and
/// P(theta) = a^H C a otherwise. With an empty sidelobe the gap is taken
/// against zero power, i.e. tau <= P(theta0).
struct DesignSpec {
  AngleGrid grid;
  double theta0 = 60.0;
  double ripple = 0.1;
  double power_cap = 1.0;
  std::optional<Beampattern> noise_offset;

  void validate(const ArrayConfig& cfg) const;
  /// FNV-1a digest of every field, stored in serialized results.
  std::uint64_t hash() const;
};

/// Midpoint of the smallest and largest mainlobe angle.
double mainlobe_midpoint(const AngleGrid& grid);

struct DesignResult {
  CMatrix covariance;
  double tau = 0.0;
  SolverResiduals residuals;
};

struct SolverOptions {
  double tolerance = 1e-9;  // relative primal, dual and gap residuals
  int max_iterations = 300;
};

/// Solves the design problem with an infeasible-start primal-dual interior-point
/// method (HKM direction, Mehrotra predictor-corrector). Throws InfeasibleError
/// (with the most violated constraint) when the iterates certify infeasibility
/// and ConvergenceError when the iteration cap is hit.
DesignResult solve_beampattern_design(const DesignSpec& spec, const ArrayConfig& cfg,
                                      const SolverOptions& opts = {});

/// Largest violation of the spec's constraints by (C, tau), evaluated through
/// analytic_pattern. Positive values are violations in power units.
struct ConstraintReport {
  double max_violation = 0.0;
  std::string worst;
};
ConstraintReport check_design(const DesignSpec& spec, const ArrayConfig& cfg, const CMatrix& C, double tau);

}  // namespace sddfrc
