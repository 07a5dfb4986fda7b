// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#include "sddfrc/comms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sddfrc/errors.hpp"
#include "sddfrc/rng.hpp"

namespace sddfrc {

void ChannelConfig::validate() const {
  if (n_users < 1) throw ContractError("ChannelConfig: n_users must be >= 1");
  if (n_paths < 1) throw ContractError("ChannelConfig: n_paths must be >= 1");
  if (!(angle_low > -90.0 && angle_high < 90.0 && angle_low <= angle_high))
    throw ContractError("ChannelConfig: angle range must lie inside (-90, 90)");
  if (!(min_separation >= 0.0)) throw ContractError("ChannelConfig: min_separation must be >= 0");
  if (!(gain_r1_low > 0.0 && gain_r1_high >= gain_r1_low))
    throw ContractError("ChannelConfig: r1 range must be positive and ordered");
  if (!(noise_variance > 0.0)) throw ContractError("ChannelConfig: noise_variance must be positive");
}

CMatrix channel_from_paths(const std::vector<double>& angles, const std::vector<cdouble>& gains,
                           int n_paths, const ArrayConfig& array) {
  if (n_paths < 1 || angles.size() != gains.size() || angles.size() % static_cast<std::size_t>(n_paths) != 0)
    throw ContractError("channel_from_paths: angles and gains must hold K * n_paths entries");
  const auto K = static_cast<Eigen::Index>(angles.size() / static_cast<std::size_t>(n_paths));
  CMatrix H = CMatrix::Zero(K, array.n_antennas);
  for (Eigen::Index k = 0; k < K; ++k) {
    CVector h = CVector::Zero(array.n_antennas);
    for (int j = 0; j < n_paths; ++j) {
      const auto idx = static_cast<std::size_t>(k * n_paths + j);
      h += gains[idx] * steering_vector(angles[idx], array);
    }
    H.row(k) = h.adjoint();
  }
  return H;
}

Channel generate_channel(const ChannelConfig& cfg, const ArrayConfig& array, std::uint64_t seed) {
  cfg.validate();
  array.validate();
  const int total = cfg.n_users * cfg.n_paths;
  const double span = cfg.angle_high - cfg.angle_low;
  if (static_cast<double>(total - 1) * cfg.min_separation > span)
    throw ContractError("generate_channel: " + std::to_string(total) + " path angles cannot be " +
                        std::to_string(cfg.min_separation) + " deg apart inside the sector");

  Philox rng(seed, 0);
  std::vector<double> angles;
  constexpr int kMaxRestarts = 1000;
  constexpr int kMaxDraws = 10000;
  for (int restart = 0; restart < kMaxRestarts && static_cast<int>(angles.size()) < total; ++restart) {
    angles.clear();
    for (int i = 0; i < total; ++i) {
      bool placed = false;
      for (int draw = 0; draw < kMaxDraws && !placed; ++draw) {
        const double a = rng.uniform(cfg.angle_low, cfg.angle_high);
        placed = std::all_of(angles.begin(), angles.end(),
                             [&](double b) { return std::abs(a - b) >= cfg.min_separation; });
        if (placed) angles.push_back(a);
      }
      if (!placed) break;
    }
  }
  if (static_cast<int>(angles.size()) < total)
    throw ContractError("generate_channel: rejection sampling could not separate the path angles");

  Channel ch;
  ch.path_angles = angles;
  ch.path_gains.reserve(angles.size());
  for (int i = 0; i < total; ++i) {
    const double phase = rng.uniform(-std::numbers::pi, std::numbers::pi);
    const double r1 = rng.uniform(cfg.gain_r1_low, cfg.gain_r1_high);
    ch.path_gains.push_back(std::polar(cfg.gain_r0 / r1, phase));
  }
  ch.H = channel_from_paths(ch.path_angles, ch.path_gains, cfg.n_paths, array);
  return ch;
}

CMatrix random_qpsk(Eigen::Index K, Eigen::Index L, std::uint64_t seed) {
  Philox rng(seed, 0);
  const double a = 1.0 / std::numbers::sqrt2;
  CMatrix S(K, L);
  for (Eigen::Index l = 0; l < L; ++l)
    for (Eigen::Index k = 0; k < K; ++k) {
      const std::uint32_t bits = rng.next_u32();
      S(k, l) = {(bits & 1u) ? -a : a, (bits & 2u) ? -a : a};
    }
  return S;
}

CMatrix transmit_receive(const CMatrix& H, const CMatrix& X, double sigma_v, std::uint64_t seed) {
  if (H.cols() != X.rows()) throw ContractError("transmit_receive: H columns differ from X rows");
  if (!(sigma_v >= 0.0)) throw ContractError("transmit_receive: sigma_v must be >= 0");
  CMatrix Y = H * X;
  if (sigma_v > 0.0) {
    Philox rng(seed, 0);
    const double var = sigma_v * sigma_v;
    for (Eigen::Index l = 0; l < Y.cols(); ++l)
      for (Eigen::Index k = 0; k < Y.rows(); ++k) Y(k, l) += rng.complex_normal(var);
  }
  return Y;
}

CMatrix detect_qpsk(const CMatrix& Y) {
  const double a = 1.0 / std::numbers::sqrt2;
  return Y.unaryExpr([a](cdouble y) {
    return cdouble{y.real() >= 0.0 ? a : -a, y.imag() >= 0.0 ? a : -a};
  });
}

BitErrorCount count_bit_errors(const CMatrix& S, const CMatrix& S_hat) {
  if (S.rows() != S_hat.rows() || S.cols() != S_hat.cols())
    throw ContractError("bit_error_rate: symbol matrices differ in shape");
  BitErrorCount c;
  c.bits = 2 * S.size();
  for (Eigen::Index i = 0; i < S.size(); ++i) {
    const auto s = S.data()[i];
    const auto t = S_hat.data()[i];
    c.errors += ((s.real() >= 0.0) != (t.real() >= 0.0)) + ((s.imag() >= 0.0) != (t.imag() >= 0.0));
  }
  return c;
}

double bit_error_rate(const CMatrix& S, const CMatrix& S_hat) {
  return count_bit_errors(S, S_hat).rate();
}

}  // namespace sddfrc
