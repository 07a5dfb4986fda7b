// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#include "sddfrc/sigma_delta.hpp"

#include <cmath>
#include <string>

#include "sddfrc/errors.hpp"
#include "sddfrc/kernels.hpp"

namespace sddfrc {

cdouble quantize(cdouble x) {
  if (std::isnan(x.real()) || std::isnan(x.imag())) throw DomainError("quantize: NaN input");
  return {x.real() >= 0.0 ? 1.0 : -1.0, x.imag() >= 0.0 ? 1.0 : -1.0};
}

void modulate_column(const Eigen::Ref<const CVector>& xbar, Eigen::Ref<CVector> x,
                     Eigen::Ref<CVector> q) {
  if (x.size() != xbar.size() || q.size() != xbar.size())
    throw ContractError("modulate_column: output length differs from input");
  cdouble feedback = 0.0;
  for (Eigen::Index n = 0; n < xbar.size(); ++n) {
    const cdouble u = xbar(n) - feedback;
    x(n) = quantize(u);
    q(n) = x(n) - u;
    feedback = q(n);
  }
}

ModulationRecord modulate(const WaveformMatrix& xbar, int expected_antennas) {
  if (expected_antennas > 0 && xbar.antennas() != expected_antennas)
    throw ContractError("modulate: input has " + std::to_string(xbar.antennas()) +
                        " rows, array declares " + std::to_string(expected_antennas));
  ModulationRecord rec;
  rec.output.domain = SignalDomain::one_bit;
  kernels::omp::modulate(xbar.entries, rec.output.entries, rec.noise);
  return rec;
}

Eigen::Index ModulationRecord::overload_count() const {
  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < noise.size(); ++i) {
    const auto v = noise.data()[i];
    if (std::abs(v.real()) > 1.0 || std::abs(v.imag()) > 1.0) ++count;
  }
  return count;
}

CMatrix delayed(const CMatrix& q) {
  CMatrix d = CMatrix::Zero(q.rows(), q.cols());
  if (q.rows() > 1) d.bottomRows(q.rows() - 1) = q.topRows(q.rows() - 1);
  return d;
}

}  // namespace sddfrc
