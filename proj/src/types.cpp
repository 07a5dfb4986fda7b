// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#include "sddfrc/types.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "sddfrc/errors.hpp"

namespace sddfrc {

const char* to_string(SignalDomain d) noexcept {
  switch (d) {
    case SignalDomain::free: return "free";
    case SignalDomain::boxed: return "boxed";
    case SignalDomain::one_bit: return "one_bit";
  }
  return "free";
}

SignalDomain domain_from_string(const char* s) {
  if (std::strcmp(s, "free") == 0) return SignalDomain::free;
  if (std::strcmp(s, "boxed") == 0) return SignalDomain::boxed;
  if (std::strcmp(s, "one_bit") == 0) return SignalDomain::one_bit;
  throw ContractError(std::string("unknown signal domain '") + s + "'");
}

bool is_one_bit(const CMatrix& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const auto v = x.data()[i];
    if (std::abs(v.real()) != 1.0 || std::abs(v.imag()) != 1.0) return false;
  }
  return true;
}

bool is_boxed(const CMatrix& x, double tol) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const auto v = x.data()[i];
    if (!(std::abs(v.real()) <= 1.0 + tol) || !(std::abs(v.imag()) <= 1.0 + tol)) return false;
  }
  return true;
}

void check_domain(const WaveformMatrix& w) {
  if (w.domain == SignalDomain::one_bit && !is_one_bit(w.entries))
    throw ContractError("waveform tagged one_bit holds non one-bit entries");
  if (w.domain == SignalDomain::boxed && !is_boxed(w.entries))
    throw ContractError("waveform tagged boxed exceeds the unit amplitude box");
}

}  // namespace sddfrc
