// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace sddfrc {

using cdouble = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Value domain of a waveform block.
enum class SignalDomain { free, boxed, one_bit };

const char* to_string(SignalDomain d) noexcept;
SignalDomain domain_from_string(const char* s);

/// Complex N x L signal block, one column per time instant.
struct WaveformMatrix {
  CMatrix entries;
  SignalDomain domain = SignalDomain::free;

  Eigen::Index antennas() const { return entries.rows(); }
  Eigen::Index length() const { return entries.cols(); }
};

/// True when every entry is one of {+-1 +-j}.
bool is_one_bit(const CMatrix& x);
/// True when |Re| <= 1 and |Im| <= 1 entrywise (with slack `tol`).
bool is_boxed(const CMatrix& x, double tol = 0.0);

/// Throws ContractError when the domain tag does not hold for the entries.
void check_domain(const WaveformMatrix& w);

}  // namespace sddfrc
