// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <fstream>

#include "sddfrc/covariance_design.hpp"
#include "sddfrc/errors.hpp"

using namespace sddfrc;

namespace {

std::vector<std::pair<double, double>> intervals(const nlohmann::json& j) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : j) out.emplace_back(p[0].get<double>(), p[1].get<double>());
  return out;
}

DesignSpec small_spec(double power_cap = 1.0, double ripple = 0.1,
                      std::vector<std::pair<double, double>> sidelobe = {{-90, 10}, {50, 90}}) {
  DesignSpec s;
  s.grid = AngleGrid::with_regions(-90, 90, 2, {{20, 40}}, sidelobe);
  s.theta0 = 30;
  s.ripple = ripple;
  s.power_cap = power_cap;
  return s;
}

void check_psd(const CMatrix& C) {
  CHECK((C - C.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(C);
  CHECK(eig.eigenvalues().minCoeff() >= -1e-8 * std::max(1.0, eig.eigenvalues().maxCoeff()));
}

}  // namespace

TEST_CASE("N=8 designs agree with the offline conic-solver reference") {
  std::ifstream is(std::string(SDDFRC_FIXTURE_DIR) + "/sdp_reference_n8.json");
  REQUIRE(is.good());
  const nlohmann::json doc = nlohmann::json::parse(is);
  REQUIRE(doc["cases"].size() == 2);
  for (const auto& c : doc["cases"]) {
    CAPTURE(c["name"].get<std::string>());
    const ArrayConfig cfg{c["n_antennas"].get<int>(), c["spacing_ratio"].get<double>()};
    DesignSpec spec;
    spec.grid = AngleGrid::with_regions(-90, 90, c["step"].get<double>(), intervals(c["mainlobe"]),
                                        intervals(c["sidelobe"]));
    spec.theta0 = mainlobe_midpoint(spec.grid);
    spec.ripple = c["ripple"].get<double>();
    spec.power_cap = c["power_cap"].get<double>();
    if (c["noise_offset"].get<bool>()) spec.noise_offset = quantization_noise_pattern(spec.grid, cfg);
    const DesignResult r = solve_beampattern_design(spec, cfg);
    const double ref = c["tau_reference"].get<double>();
    CHECK(std::abs(r.tau - ref) <= 0.01 * ref);
    CHECK(check_design(spec, cfg, r.covariance, r.tau).max_violation <= 1e-6);
    check_psd(r.covariance);
  }
}

TEST_CASE("design satisfies its constraints and reports residuals") {
  const ArrayConfig cfg{8, 0.5};
  const DesignSpec spec = small_spec();
  const DesignResult r = solve_beampattern_design(spec, cfg);
  CHECK(r.tau > 0.0);
  const ConstraintReport rep = check_design(spec, cfg, r.covariance, r.tau);
  CHECK(rep.max_violation <= 1e-6);
  for (int n = 0; n < 8; ++n) CHECK(r.covariance(n, n).real() <= 1.0 + 1e-6);
  CHECK(r.residuals.iterations > 0);
  CHECK(r.residuals.primal_residual <= 1e-6);
  // A perturbed tau is a violated certificate.
  CHECK(check_design(spec, cfg, r.covariance, r.tau + 1.0).max_violation > 0.5);
}

TEST_CASE("single-angle mainlobe focuses all power") {
  const ArrayConfig cfg{8, 0.5};
  DesignSpec spec;
  spec.grid = AngleGrid::with_regions(-90, 90, 5, {{30, 30}}, {});
  spec.theta0 = 30;
  spec.ripple = 0.0;
  spec.power_cap = 0.5;
  const DesignResult r = solve_beampattern_design(spec, cfg);
  const CVector a = steering_vector(30, cfg);
  const double p0 = (a.adjoint() * r.covariance * a)(0, 0).real();
  CHECK(p0 >= spec.power_cap * cfg.n_antennas);
  CHECK(check_design(spec, cfg, r.covariance, r.tau).max_violation <= 1e-6);
}

TEST_CASE("a wider sidelobe region cannot improve the gap") {
  const ArrayConfig cfg{8, 0.5};
  const double narrow = solve_beampattern_design(small_spec(1.0, 0.1, {{-90, 0}, {60, 90}}), cfg).tau;
  const double wide = solve_beampattern_design(small_spec(1.0, 0.1, {{-90, 10}, {50, 90}}), cfg).tau;
  CHECK(wide <= narrow * (1 + 1e-6));
}

TEST_CASE("without a noise offset the design is homogeneous in the power cap") {
  const ArrayConfig cfg{8, 0.5};
  const DesignResult base = solve_beampattern_design(small_spec(1.0), cfg);
  for (double c : {0.5, 2.0}) {
    const DesignResult r = solve_beampattern_design(small_spec(c), cfg);
    CHECK(r.tau == doctest::Approx(c * base.tau).epsilon(1e-5));
  }
}

TEST_CASE("an unreachable noise offset is reported as infeasible") {
  const ArrayConfig cfg{8, 0.125};
  DesignSpec spec;
  spec.grid = AngleGrid::with_regions(-90, 90, 1, {{55, 65}}, {{-90, 50}, {70, 90}});
  spec.theta0 = 60;
  spec.ripple = 0.1;
  spec.power_cap = 1e-4;
  spec.noise_offset = quantization_noise_pattern(spec.grid, cfg);
  try {
    solve_beampattern_design(spec, cfg);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    CHECK(e.violation() > 0.0);
    CHECK_FALSE(e.constraint().empty());
  }
}

TEST_CASE("spec validation") {
  const ArrayConfig cfg{8, 0.5};
  DesignSpec zero_ripple = small_spec(1.0, 0.0);
  CHECK_THROWS_AS(solve_beampattern_design(zero_ripple, cfg), ContractError);

  DesignSpec outside = small_spec();
  outside.theta0 = 60;
  CHECK_THROWS_AS(outside.validate(cfg), ContractError);

  DesignSpec neg = small_spec();
  neg.power_cap = 0.0;
  CHECK_THROWS_AS(neg.validate(cfg), ContractError);

  DesignSpec empty;
  empty.grid = AngleGrid::uniform(-90, 90, 10);
  CHECK_THROWS_AS(empty.validate(cfg), ContractError);
  CHECK_THROWS_AS(mainlobe_midpoint(empty.grid), ContractError);

  DesignSpec offgrid = small_spec();
  offgrid.noise_offset = quantization_noise_pattern(AngleGrid::uniform(-90, 90, 5), cfg);
  CHECK_THROWS_AS(offgrid.validate(cfg), ContractError);
}

TEST_CASE("spec hash tracks every field") {
  const DesignSpec a = small_spec();
  CHECK(a.hash() == small_spec().hash());
  DesignSpec b = a;
  b.ripple = 0.11;
  CHECK(b.hash() != a.hash());
  DesignSpec c = a;
  c.power_cap = 2.0;
  CHECK(c.hash() != a.hash());
  DesignSpec d = a;
  d.noise_offset = quantization_noise_pattern(a.grid, ArrayConfig{8, 0.5});
  CHECK(d.hash() != a.hash());
  CHECK(mainlobe_midpoint(a.grid) == 30.0);
}
