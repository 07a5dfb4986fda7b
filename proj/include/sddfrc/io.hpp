// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sddfrc/array.hpp"
#include "sddfrc/covariance_design.hpp"
#include "sddfrc/types.hpp"

namespace sddfrc {

/// Serialization errors (truncated files, bad magic, header mismatch).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A covariance design as stored on disk.
///
/// Layout (all little-endian): magic "SDDFCOV1", u32 N, f64 spacing_ratio,
/// u64 spec hash, f64 tau, 3 x f64 + i32 solver residuals, then N*N complex
/// entries row-major with real and imaginary parts interleaved.
struct StoredDesign {
  ArrayConfig array;
  std::uint64_t spec_hash = 0;
  DesignResult result;
};

void write_design(std::ostream& os, const StoredDesign& d);
StoredDesign read_design(std::istream& is);
void save_design(const std::filesystem::path& path, const StoredDesign& d);
StoredDesign load_design(const std::filesystem::path& path);

/// Waveform block layout: magic "SDDFWAV1", u64 N, u64 L, u8 domain tag
/// (0 free, 1 boxed, 2 one_bit), then N*L complex entries row-major, interleaved.
void write_waveform(std::ostream& os, const WaveformMatrix& w);
WaveformMatrix read_waveform(std::istream& is);
void save_waveform(const std::filesystem::path& path, const WaveformMatrix& w);
WaveformMatrix load_waveform(const std::filesystem::path& path);

/// Shortest decimal that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace sddfrc
