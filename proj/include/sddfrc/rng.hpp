// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>

#include "sddfrc/types.hpp"

namespace sddfrc {

/// Philox4x32-10 counter-based generator.
///
/// The key is the 64-bit seed, the upper half of the 128-bit counter is a
/// 64-bit stream id and the lower half counts blocks. Two generators with the
/// same (seed, stream) produce identical sequences on every platform, which
/// is what lets Monte Carlo trials and matrix columns own private streams.
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  std::uint32_t next_u32() noexcept;
  std::uint64_t next_u64() noexcept;
  /// Uniform in (0, 1), never exactly 0 or 1.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Standard real normal via Box-Muller (pairs are cached).
  double normal() noexcept;
  /// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
  cdouble complex_normal(double variance = 1.0) noexcept;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) noexcept;

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int used_ = 4;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Derive a child stream id from a parent id and a list of tags (splitmix64 chain).
std::uint64_t derive_stream(std::uint64_t parent, std::initializer_list<std::uint64_t> tags) noexcept;

}  // namespace sddfrc
