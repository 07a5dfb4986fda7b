// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#include "sddfrc/waveform.hpp"

#include <cmath>
#include <string>

#include "sddfrc/errors.hpp"
#include "sddfrc/rng.hpp"

namespace sddfrc {

CMatrix psd_sqrt(const CMatrix& C) {
  if (C.rows() != C.cols()) throw ContractError("psd_sqrt: matrix must be square");
  if (C.size() == 0) return C;
  const CMatrix sym = 0.5 * (C + C.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(sym);
  if (eig.info() != Eigen::Success) throw ContractError("psd_sqrt: eigendecomposition failed");
  RVector ev = eig.eigenvalues();
  const double tol = 1e-8 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -tol)
      throw ContractError("psd_sqrt: matrix is not PSD (eigenvalue " + std::to_string(ev(i)) + ")");
    ev(i) = ev(i) > 0.0 ? std::sqrt(ev(i)) : 0.0;
  }
  const CMatrix& V = eig.eigenvectors();
  CMatrix S = V * ev.asDiagonal() * V.adjoint();
  return 0.5 * (S + S.adjoint());
}

double mixing_variance(MixingVariance v) noexcept {
  return v == MixingVariance::unit ? 1.0 : 1.0 / std::sqrt(2.0);
}

WaveformMatrix synthesize_from_sqrt(const CMatrix& sqrtC, Eigen::Index L, std::uint64_t seed,
                                    MixingVariance variance) {
  if (L < 1) throw ContractError("synthesize_radar: block length must be >= 1");
  const Eigen::Index N = sqrtC.rows();
  const double var = mixing_variance(variance);
  CMatrix W(N, L);
#pragma omp parallel for schedule(static)
  for (Eigen::Index l = 0; l < L; ++l) {
    Philox rng(seed, static_cast<std::uint64_t>(l));
    for (Eigen::Index n = 0; n < N; ++n) W(n, l) = rng.complex_normal(var);
  }
  return {sqrtC * W, SignalDomain::free};
}

WaveformMatrix synthesize_radar(const CMatrix& C, Eigen::Index L, std::uint64_t seed,
                                MixingVariance variance) {
  return synthesize_from_sqrt(psd_sqrt(C), L, seed, variance);
}

}  // namespace sddfrc
