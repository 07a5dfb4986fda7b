// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>

#include "sddfrc/types.hpp"

namespace sddfrc {

/// Hermitian PSD square root S with S S = C. Eigenvalues in [-1e-8, 0) are
/// clamped to zero (relative to the largest eigenvalue magnitude when it exceeds 1);
/// anything more negative raises ContractError.
CMatrix psd_sqrt(const CMatrix& C);

/// Variance of the complex Gaussian mixing vectors w_l.
enum class MixingVariance {
  unit,          // w ~ CN(0, I): E[x x^H] = C
  inv_sqrt_two,  // w ~ CN(0, I / sqrt(2)): E[x x^H] = C / sqrt(2)
};

/// X = C^{1/2} W with independent complex Gaussian columns. Column l draws from
/// Philox stream (seed, l), so the block is reproducible and columns can be
/// generated in parallel.
WaveformMatrix synthesize_radar(const CMatrix& C, Eigen::Index L, std::uint64_t seed,
                                MixingVariance variance = MixingVariance::unit);

/// Same as above with a precomputed square root.
WaveformMatrix synthesize_from_sqrt(const CMatrix& sqrtC, Eigen::Index L, std::uint64_t seed,
                                    MixingVariance variance = MixingVariance::unit);

double mixing_variance(MixingVariance v) noexcept;

}  // namespace sddfrc
