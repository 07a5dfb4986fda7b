// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace sddfrc {

/// Violated precondition on shapes, ranges or structural invariants.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed configuration text; carries the offending line (1-based, 0 if unknown) and key.
class ParseError : public ContractError {
 public:
  ParseError(const std::string& what, int line, std::string key)
      : ContractError(what), line_(line), key_(std::move(key)) {}

  int line() const noexcept { return line_; }
  const std::string& key() const noexcept { return key_; }

 private:
  int line_;
  std::string key_;
};

/// Argument outside the mathematical domain of an operation (NaN, |theta| > 90).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a solver cannot find a point satisfying all constraints.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, std::string constraint, double violation)
      : std::runtime_error(what), constraint_(std::move(constraint)), violation_(violation) {}

  const std::string& constraint() const noexcept { return constraint_; }
  double violation() const noexcept { return violation_; }

 private:
  std::string constraint_;
  double violation_;
};

/// Convergence diagnostics of the interior-point solver (relative measures).
struct SolverResiduals {
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double duality_gap = 0.0;
  int iterations = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, SolverResiduals residuals)
      : std::runtime_error(what), residuals_(residuals) {}

  const SolverResiduals& residuals() const noexcept { return residuals_; }

 private:
  SolverResiduals residuals_;
};

}  // namespace sddfrc
