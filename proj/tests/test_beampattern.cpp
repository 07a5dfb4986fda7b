// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sddfrc/beampattern.hpp"
#include "sddfrc/errors.hpp"
#include "test_util.hpp"

using namespace sddfrc;

namespace {

// Double loop over antenna pairs, no steering matrix.
double quadratic_oracle(const CMatrix& C, double theta, const ArrayConfig& cfg) {
  const double w = 2 * std::numbers::pi * cfg.spacing_ratio * std::sin(theta * std::numbers::pi / 180.0);
  cdouble acc = 0.0;
  for (int m = 0; m < cfg.n_antennas; ++m)
    for (int n = 0; n < cfg.n_antennas; ++n) acc += std::polar(1.0, -w * m) * C(m, n) * std::polar(1.0, w * n);
  return acc.real();
}

}  // namespace

TEST_CASE("analytic pattern of the identity is flat at N") {
  const ArrayConfig cfg{8, 0.125};
  const AngleGrid g = AngleGrid::uniform(-90, 90, 1);
  const Beampattern p = analytic_pattern(CMatrix::Identity(8, 8), g, cfg);
  for (Eigen::Index i = 0; i < p.power.size(); ++i) CHECK(p.power(i) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("rank-one covariance peaks at N^2 in its steering direction") {
  const ArrayConfig cfg{8, 0.5};
  const CVector a = steering_vector(20.0, cfg);
  const AngleGrid g = AngleGrid::uniform(-90, 90, 0.5);
  const Beampattern p = analytic_pattern(a * a.adjoint(), g, cfg);
  Eigen::Index arg = 0;
  p.power.maxCoeff(&arg);
  CHECK(g.angles[static_cast<std::size_t>(arg)] == 20.0);
  CHECK(p.power(arg) == doctest::Approx(64.0).epsilon(1e-12));
}

TEST_CASE("analytic pattern against a double-loop oracle") {
  std::mt19937_64 gen(21);
  const ArrayConfig cfg{6, 0.3};
  const CMatrix C = testutil::random_psd(gen, 6);
  const AngleGrid g = AngleGrid::uniform(-90, 90, 7.5);
  const Beampattern p = analytic_pattern(C, g, cfg);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(p.power(static_cast<Eigen::Index>(i)) ==
          doctest::Approx(quadratic_oracle(C, g.angles[i], cfg)).epsilon(1e-11));
}

TEST_CASE("analytic pattern rejects non-Hermitian and mis-sized input") {
  const ArrayConfig cfg{4, 0.5};
  const AngleGrid g = AngleGrid::uniform(0, 10, 5);
  CMatrix C = CMatrix::Identity(4, 4);
  C(0, 1) = cdouble(0.5, 0.0);
  CHECK_THROWS_AS(analytic_pattern(C, g, cfg), ContractError);
  CHECK_THROWS_AS(analytic_pattern(CMatrix::Identity(3, 3), g, cfg), ContractError);
}

TEST_CASE("pattern only sees the Hermitian part") {
  std::mt19937_64 gen(22);
  const ArrayConfig cfg{5, 0.25};
  const AngleGrid g = AngleGrid::uniform(-60, 60, 10);
  const CMatrix C = testutil::random_psd(gen, 5);
  const CMatrix tiny = testutil::random_matrix(gen, 5, 5, 1e-13);
  const Beampattern p = analytic_pattern(C, g, cfg);
  const Beampattern q = analytic_pattern(C + tiny, g, cfg);
  CHECK((p.power - q.power).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("empirical pattern examples") {
  const ArrayConfig cfg{4, 0.125};
  const AngleGrid g = AngleGrid::uniform(-90, 90, 15);
  // One column equal to the steering vector at 0 deg.
  const Beampattern p = empirical_pattern(CMatrix::Ones(4, 1), g, cfg);
  CHECK(p.power(6) == doctest::Approx(16.0).epsilon(1e-13));
  // Energy on a single antenna radiates isotropically.
  CMatrix e = CMatrix::Zero(4, 3);
  e.row(2).setConstant(cdouble(0, 2));
  const Beampattern q = empirical_pattern(e, g, cfg);
  for (Eigen::Index i = 0; i < q.power.size(); ++i) CHECK(q.power(i) == doctest::Approx(4.0).epsilon(1e-13));

  CHECK_THROWS_AS(empirical_pattern(CMatrix(4, 0), g, cfg), ContractError);
  CHECK_THROWS_AS(empirical_pattern(CMatrix::Ones(3, 2), g, cfg), ContractError);
}

TEST_CASE("empirical pattern of white samples approaches the analytic one") {
  std::mt19937_64 gen(23);
  const ArrayConfig cfg{32, 0.125};
  const AngleGrid g = AngleGrid::uniform(-90, 90, 5);
  const CMatrix X = testutil::random_matrix(gen, 32, 10000, std::sqrt(0.5));
  const Beampattern p = empirical_pattern(X, g, cfg);
  for (Eigen::Index i = 0; i < p.power.size(); ++i) CHECK(p.power(i) == doctest::Approx(32.0).epsilon(0.1));
}

TEST_CASE("accumulator merge equals a single pass") {
  std::mt19937_64 gen(24);
  const ArrayConfig cfg{6, 0.5};
  const AngleGrid g = AngleGrid::uniform(-90, 90, 3);
  const CMatrix X = testutil::random_matrix(gen, 6, 40);
  PatternAccumulator a(g, cfg), b(g, cfg);
  a.add(X.leftCols(15));
  b.add(X.rightCols(25));
  a.merge(b);
  CHECK(a.columns() == 40);
  const Beampattern whole = empirical_pattern(X, g, cfg);
  CHECK((a.finish().power - whole.power).cwiseAbs().maxCoeff() < 1e-10);

  PatternAccumulator other(AngleGrid::uniform(0, 10, 5), cfg);
  CHECK_THROWS_AS(a.merge(other), ContractError);
  CHECK_THROWS_AS(PatternAccumulator(g, cfg).finish(), ContractError);
}

TEST_CASE("quantization noise pattern values") {
  const ArrayConfig cfg{64, 0.125};
  CHECK(quantization_noise_power(0.0, cfg) == 0.0);
  const double s = std::sin(std::numbers::pi / 8);
  CHECK(quantization_noise_power(90.0, cfg) == doctest::Approx(8.0 * 63 / 3 * s * s).epsilon(1e-14));
  const double s30 = std::sin(std::numbers::pi / 16);
  CHECK(quantization_noise_power(30.0, cfg) == doctest::Approx(168.0 * s30 * s30).epsilon(1e-14));
  double prev = -1.0;
  for (double t = 0.0; t <= 90.0; t += 2.5) {
    const double d = quantization_noise_power(t, cfg);
    CHECK(d == doctest::Approx(quantization_noise_power(-t, cfg)).epsilon(1e-15));
    CHECK(d > prev);
    prev = d;
  }
}

TEST_CASE("shaped noise of boxed Gaussian input follows D(theta)") {
  std::mt19937_64 gen(25);
  const ArrayConfig cfg{64, 0.125};
  CMatrix in = testutil::random_matrix(gen, 64, 4000, 1.0 / 3.0);
  in = in.unaryExpr([](cdouble v) {
    return cdouble(std::clamp(v.real(), -1.0, 1.0), std::clamp(v.imag(), -1.0, 1.0));
  });
  const ModulationRecord rec = modulate(WaveformMatrix{in, SignalDomain::boxed});
  AngleGrid g;
  g.angles = {30.0, 60.0};
  g.mainlobe = g.sidelobe = {false, false};
  const Beampattern p = empirical_pattern(shaped_noise(rec), g, cfg);
  for (Eigen::Index i = 0; i < 2; ++i) {
    const double d = quantization_noise_power(g.angles[static_cast<std::size_t>(i)], cfg);
    CHECK(std::abs(to_db(p.power(i)) - to_db(d)) <= 2.0);
  }
}

TEST_CASE("pattern MSE") {
  const AngleGrid g = AngleGrid::uniform(0, 4, 1);
  Beampattern a{g, RVector::Constant(5, 3.0)};
  CHECK(pattern_mse_db(a, a) == kMseFloorDb);
  Beampattern b{g, RVector::Constant(5, 13.0)};
  CHECK(pattern_mse_db(b, a) == doctest::Approx(20.0).epsilon(1e-14));
  Beampattern c{AngleGrid::uniform(0, 8, 2), RVector::Constant(5, 3.0)};
  CHECK_THROWS_AS(pattern_mse_db(a, c), ContractError);
  CHECK(to_db(0.0) == kMseFloorDb);
  CHECK(to_db(1e-320) == kMseFloorDb);
}
