// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <vector>

#include "sddfrc/array.hpp"
#include "sddfrc/types.hpp"

namespace sddfrc {

struct ChannelConfig {
  int n_users = 6;
  int n_paths = 4;
  double angle_low = -20.0;
  double angle_high = 20.0;
  double min_separation = 0.5;
  double gain_r0 = 10.0;
  double gain_r1_low = 20.0;
  double gain_r1_high = 100.0;
  double noise_variance = 1.0;

  void validate() const;
};

/// Multipath downlink: row k of H is h_k^H with h_k = sum_j alpha_kj a(theta_kj).
struct Channel {
  CMatrix H;
  std::vector<double> path_angles;  // K * J, user-major
  std::vector<cdouble> path_gains;  // K * J, user-major
};

/// Build H from explicit path angles and gains (user-major, n_paths per user).
CMatrix channel_from_paths(const std::vector<double>& angles, const std::vector<cdouble>& gains,
                           int n_paths, const ArrayConfig& array);

/// Angles uniform in [angle_low, angle_high] redrawn until every pair is at
/// least min_separation apart; phases uniform on [-pi, pi]; |alpha| = r0 / r1
/// with r1 uniform. Deterministic in seed.
Channel generate_channel(const ChannelConfig& cfg, const ArrayConfig& array, std::uint64_t seed);

/// Unit-energy QPSK symbols (+-1 +-j) / sqrt(2).
CMatrix random_qpsk(Eigen::Index K, Eigen::Index L, std::uint64_t seed);

/// Y = H X + V with V entries CN(0, sigma_v^2).
CMatrix transmit_receive(const CMatrix& H, const CMatrix& X, double sigma_v, std::uint64_t seed);

/// Quadrant decision (sgn Re + j sgn Im) / sqrt(2), sgn(0) = +1.
CMatrix detect_qpsk(const CMatrix& Y);

struct BitErrorCount {
  std::int64_t errors = 0;
  std::int64_t bits = 0;
  double rate() const { return bits == 0 ? 0.0 : static_cast<double>(errors) / static_cast<double>(bits); }
};

/// Gray-mapped QPSK: one bit per quadrature sign.
BitErrorCount count_bit_errors(const CMatrix& S, const CMatrix& S_hat);
double bit_error_rate(const CMatrix& S, const CMatrix& S_hat);

}  // namespace sddfrc
