// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include "sddfrc/types.hpp"

namespace sddfrc {

/// Complex one-bit quantizer: sgn(Re x) + j sgn(Im x), with sgn(0) = +1.
/// Throws DomainError on NaN input.
cdouble quantize(cdouble x);

/// Output of the spatial first-order sigma-delta modulator.
///
/// `output` is the one-bit block, `noise` holds q_{n,l} so that
/// output = input - delayed(noise) + noise holds exactly up to rounding,
/// where delayed(noise) shifts every column down one antenna with a zero on top.
struct ModulationRecord {
  WaveformMatrix output;
  CMatrix noise;

  /// Number of noise entries with |Re| > 1 or |Im| > 1 (quantizer overload).
  Eigen::Index overload_count() const;
};

/// Column of the modulator. Antenna 0 is the recursion root (no feedback).
void modulate_column(const Eigen::Ref<const CVector>& xbar, Eigen::Ref<CVector> x,
                     Eigen::Ref<CVector> q);

/// Modulate every column of `xbar`; columns are independent.
/// When expected_antennas > 0, a row-count mismatch raises ContractError.
ModulationRecord modulate(const WaveformMatrix& xbar, int expected_antennas = 0);

/// Shift each column of q down by one antenna (first row zero).
CMatrix delayed(const CMatrix& q);

}  // namespace sddfrc
