// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#include "sddfrc/io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "sddfrc/errors.hpp"

namespace sddfrc {

namespace {

constexpr char kCovMagic[8] = {'S', 'D', 'D', 'F', 'C', 'O', 'V', '1'};
constexpr char kWavMagic[8] = {'S', 'D', 'D', 'F', 'W', 'A', 'V', '1'};

// Fixed little-endian encoding regardless of host order.
void put_u64(std::ostream& os, std::uint64_t v) {
  std::array<char, 8> b;
  for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(b.data(), 8);
}

void put_u32(std::ostream& os, std::uint32_t v) {
  std::array<char, 4> b;
  for (int i = 0; i < 4; ++i) b[static_cast<std::size_t>(i)] = static_cast<char>((v >> (8 * i)) & 0xFF);
  os.write(b.data(), 4);
}

void put_f64(std::ostream& os, double v) { put_u64(os, std::bit_cast<std::uint64_t>(v)); }

std::uint64_t get_u64(std::istream& is) {
  std::array<unsigned char, 8> b;
  if (!is.read(reinterpret_cast<char*>(b.data()), 8)) throw FormatError("unexpected end of file");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
  return v;
}

std::uint32_t get_u32(std::istream& is) {
  std::array<unsigned char, 4> b;
  if (!is.read(reinterpret_cast<char*>(b.data()), 4)) throw FormatError("unexpected end of file");
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
  return v;
}

double get_f64(std::istream& is) { return std::bit_cast<double>(get_u64(is)); }

void expect_magic(std::istream& is, const char (&magic)[8], const char* what) {
  char got[8];
  if (!is.read(got, 8) || std::memcmp(got, magic, 8) != 0)
    throw FormatError(std::string("not a ") + what + " file (bad magic)");
}

void put_matrix(std::ostream& os, const CMatrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      put_f64(os, m(r, c).real());
      put_f64(os, m(r, c).imag());
    }
}

CMatrix get_matrix(std::istream& is, Eigen::Index rows, Eigen::Index cols) {
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      const double re = get_f64(is);
      const double im = get_f64(is);
      m(r, c) = cdouble(re, im);
    }
  return m;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw FormatError("cannot open " + path.string() + " for writing");
  return os;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot open " + path.string());
  return is;
}

}  // namespace

void write_design(std::ostream& os, const StoredDesign& d) {
  const CMatrix& C = d.result.covariance;
  if (C.rows() != d.array.n_antennas || C.cols() != d.array.n_antennas)
    throw ContractError("write_design: covariance size does not match the array");
  os.write(kCovMagic, 8);
  put_u32(os, static_cast<std::uint32_t>(d.array.n_antennas));
  put_f64(os, d.array.spacing_ratio);
  put_u64(os, d.spec_hash);
  put_f64(os, d.result.tau);
  put_f64(os, d.result.residuals.primal_residual);
  put_f64(os, d.result.residuals.dual_residual);
  put_f64(os, d.result.residuals.duality_gap);
  put_u32(os, static_cast<std::uint32_t>(d.result.residuals.iterations));
  put_matrix(os, C);
  if (!os) throw FormatError("write_design: stream write failed");
}

StoredDesign read_design(std::istream& is) {
  expect_magic(is, kCovMagic, "covariance");
  StoredDesign d;
  d.array.n_antennas = static_cast<int>(get_u32(is));
  d.array.spacing_ratio = get_f64(is);
  d.spec_hash = get_u64(is);
  d.result.tau = get_f64(is);
  d.result.residuals.primal_residual = get_f64(is);
  d.result.residuals.dual_residual = get_f64(is);
  d.result.residuals.duality_gap = get_f64(is);
  d.result.residuals.iterations = static_cast<int>(get_u32(is));
  try {
    d.array.validate();
  } catch (const ContractError& e) {
    throw FormatError(std::string("covariance header: ") + e.what());
  }
  d.result.covariance = get_matrix(is, d.array.n_antennas, d.array.n_antennas);
  return d;
}

void save_design(const std::filesystem::path& path, const StoredDesign& d) {
  auto os = open_out(path);
  write_design(os, d);
}

StoredDesign load_design(const std::filesystem::path& path) {
  auto is = open_in(path);
  return read_design(is);
}

void write_waveform(std::ostream& os, const WaveformMatrix& w) {
  os.write(kWavMagic, 8);
  put_u64(os, static_cast<std::uint64_t>(w.antennas()));
  put_u64(os, static_cast<std::uint64_t>(w.length()));
  const char tag = static_cast<char>(w.domain);
  os.write(&tag, 1);
  put_matrix(os, w.entries);
  if (!os) throw FormatError("write_waveform: stream write failed");
}

WaveformMatrix read_waveform(std::istream& is) {
  expect_magic(is, kWavMagic, "waveform");
  const auto n = get_u64(is);
  const auto l = get_u64(is);
  char tag = 0;
  if (!is.read(&tag, 1)) throw FormatError("unexpected end of file");
  if (tag < 0 || tag > 2) throw FormatError("waveform header: unknown domain tag " + std::to_string(int(tag)));
  constexpr std::uint64_t kMaxEntries = std::uint64_t{1} << 34;
  if (n > kMaxEntries || l > kMaxEntries || (n != 0 && l > kMaxEntries / n))
    throw FormatError("waveform header: implausible dimensions");
  WaveformMatrix w;
  w.domain = static_cast<SignalDomain>(tag);
  w.entries = get_matrix(is, static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(l));
  return w;
}

void save_waveform(const std::filesystem::path& path, const WaveformMatrix& w) {
  auto os = open_out(path);
  write_waveform(os, w);
}

WaveformMatrix load_waveform(const std::filesystem::path& path) {
  auto is = open_in(path);
  return read_waveform(is);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace sddfrc
