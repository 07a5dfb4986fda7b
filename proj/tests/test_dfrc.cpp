// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "sddfrc/dfrc.hpp"
#include "sddfrc/errors.hpp"
#include "test_util.hpp"

using namespace sddfrc;

namespace {

double kkt_residual(const CMatrix& F, const CVector& b, const ColumnSolveResult& r) {
  const CVector g = F.adjoint() * (F * r.x - b) + r.lambda * r.x;
  return g.norm() / std::max(1.0, (F.adjoint() * b).norm());
}

}  // namespace

TEST_CASE("stacked objective equals the weighted two-term cost") {
  std::mt19937_64 gen(41);
  const CMatrix H = testutil::random_matrix(gen, 3, 6);
  const CMatrix S = testutil::random_matrix(gen, 3, 5);
  const WaveformMatrix XR{testutil::random_matrix(gen, 6, 5), SignalDomain::free};
  const CMatrix X = testutil::random_matrix(gen, 6, 5);
  for (double delta : {0.1, 0.5, 0.9}) {
    const StackedSystem sys = build_system(H, S, XR, delta);
    const double direct = delta * (H * X - S).squaredNorm() + (1 - delta) * (X - XR.entries).squaredNorm();
    CHECK(stacked_objective(sys, X) == doctest::Approx(direct).epsilon(1e-12));
  }
  CHECK_THROWS_AS(build_system(H, S, XR, 0.0), ContractError);
  CHECK_THROWS_AS(build_system(H, S, XR, 1.0), ContractError);
  CHECK_THROWS_AS(build_system(H, testutil::random_matrix(gen, 2, 5), XR, 0.5), ContractError);
  CHECK_THROWS_AS(build_system(testutil::random_matrix(gen, 3, 5), S, XR, 0.5), ContractError);
}

TEST_CASE("without users the unconstrained solution is the radar block") {
  std::mt19937_64 gen(42);
  const WaveformMatrix XR{testutil::random_matrix(gen, 5, 4), SignalDomain::free};
  const StackedSystem sys = build_system(CMatrix(0, 5), CMatrix(0, 4), XR, 0.3);
  CHECK(testutil::max_abs(unconstrained_ls(sys).entries - XR.entries) < 1e-12);
}

TEST_CASE("unconstrained LS matches the normal equations") {
  std::mt19937_64 gen(43);
  const CMatrix H = testutil::random_matrix(gen, 4, 8);
  const CMatrix S = testutil::random_matrix(gen, 4, 6);
  const WaveformMatrix XR{testutil::random_matrix(gen, 8, 6), SignalDomain::free};
  const double delta = 0.4;
  const StackedSystem sys = build_system(H, S, XR, delta);
  const CMatrix A = delta * H.adjoint() * H + (1 - delta) * CMatrix::Identity(8, 8);
  const CMatrix rhs = delta * H.adjoint() * S + (1 - delta) * XR.entries;
  const CMatrix oracle = A.ldlt().solve(rhs);
  CHECK(testutil::max_abs(unconstrained_ls(sys).entries - oracle) < 1e-10);
}

TEST_CASE("delta interpolates between the radar block and the channel inverse") {
  std::mt19937_64 gen(44);
  const CMatrix H = testutil::random_matrix(gen, 2, 6);
  const CMatrix S = testutil::random_matrix(gen, 2, 3);
  const WaveformMatrix XR{testutil::random_matrix(gen, 6, 3), SignalDomain::free};
  const CMatrix lo = unconstrained_ls(build_system(H, S, XR, 1e-9)).entries;
  CHECK(testutil::max_abs(lo - XR.entries) < 1e-6);
  const CMatrix hi = unconstrained_ls(build_system(H, S, XR, 1 - 1e-9)).entries;
  CHECK(testutil::max_abs(H * hi - S) < 1e-5);
}

TEST_CASE("direct quantization, box projection and peak scaling") {
  WaveformMatrix X{CMatrix(1, 3), SignalDomain::free};
  X.entries << cdouble(0.2, -3.0), cdouble(-4.0, 0.5), cdouble(0.0, 0.0);
  const WaveformMatrix q = direct_quantize(X);
  CHECK(q.domain == SignalDomain::one_bit);
  CHECK(q.entries(0) == cdouble(1, -1));
  CHECK(q.entries(1) == cdouble(-1, 1));
  CHECK(q.entries(2) == cdouble(1, 1));

  const WaveformMatrix b = project_to_box(X);
  CHECK(b.domain == SignalDomain::boxed);
  CHECK(b.entries(0) == cdouble(0.2, -1.0));
  CHECK(b.entries(1) == cdouble(-1.0, 0.5));

  const WaveformMatrix n = normalize_amplitude(X);
  CHECK(n.domain == SignalDomain::boxed);
  CHECK(std::abs(n.entries(1) - cdouble(-1.0, 0.125)) < 1e-15);
  CHECK(is_boxed(n.entries));
  const WaveformMatrix z = normalize_amplitude(WaveformMatrix{CMatrix::Zero(2, 2), SignalDomain::free});
  CHECK(testutil::max_abs(z.entries) == 0.0);
}

TEST_CASE("constrained LS worked example") {
  const int N = 9;
  const CMatrix F = CMatrix::Identity(N, N);
  const CVector b = CVector::Constant(N, cdouble(2.0, 0.0));
  const ColumnSolveResult r = constrained_ls_column(F, b, 4.0 * N / 9.0);
  CHECK(r.active);
  CHECK(r.lambda == doctest::Approx(2.0).epsilon(1e-8));
  CHECK((r.x - CVector::Constant(N, cdouble(2.0 / 3.0, 0.0))).cwiseAbs().maxCoeff() < 1e-9);

  const ColumnSolveResult inactive = constrained_ls_column(F, b, 100.0);
  CHECK_FALSE(inactive.active);
  CHECK(inactive.lambda == 0.0);
  CHECK((inactive.x - b).cwiseAbs().maxCoeff() < 1e-13);

  CHECK_THROWS_AS(constrained_ls_column(F, b, 0.0), ContractError);
  CHECK_THROWS_AS(constrained_ls_column(F, CVector::Ones(3), 1.0), ContractError);
  CHECK_THROWS_AS(ColumnSolver(CMatrix::Ones(2, 3)), ContractError);
}

TEST_CASE("constrained LS beats random feasible points and satisfies KKT") {
  std::mt19937_64 gen(45);
  std::uniform_int_distribution<int> dim(2, 8);
  std::normal_distribution<double> nrm;
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int inst = 0; inst < 20; ++inst) {
    const int N = dim(gen);
    const int M = N + dim(gen);
    const CMatrix F = testutil::random_matrix(gen, M, N);
    const CVector b = testutil::random_vector(gen, M, 2.0);
    const double rho = 0.2 * N;
    const ColumnSolveResult r = constrained_ls_column(F, b, rho);
    const double best = (F * r.x - b).squaredNorm();
    CHECK(r.x.squaredNorm() <= rho * (1 + 1e-9));
    CHECK(kkt_residual(F, b, r) <= 1e-8);
    CHECK(r.lambda * std::abs(r.x.squaredNorm() - rho) <= 1e-8 * std::max(1.0, r.lambda * rho));
    for (int t = 0; t < 2000; ++t) {
      CVector z = testutil::random_vector(gen, N);
      z *= std::sqrt(rho) * std::pow(uni(gen), 1.0 / (2.0 * N)) / z.norm();
      REQUIRE((F * z - b).squaredNorm() >= best - 1e-9 * std::max(1.0, best));
    }
  }
}

TEST_CASE("secular norm decreases in lambda") {
  std::mt19937_64 gen(46);
  const CMatrix F = testutil::random_matrix(gen, 10, 6);
  const ColumnSolver solver(F);
  const CVector c = solver.project(testutil::random_vector(gen, 10));
  double prev = solver.secular_norm2(c, 0.0);
  for (double lam = 0.01; lam < 100.0; lam *= 1.7) {
    const double v = solver.secular_norm2(c, lam);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("sigma-delta DFRC design respects the column budget and the alphabet") {
  std::mt19937_64 gen(47);
  const ArrayConfig cfg{16, 0.125};
  const CMatrix H = testutil::random_matrix(gen, 3, 16);
  const CMatrix S = testutil::random_matrix(gen, 3, 20, std::sqrt(0.5));
  const WaveformMatrix XR{testutil::random_matrix(gen, 16, 20), SignalDomain::free};
  const StackedSystem sys = build_system(H, S, XR, 0.5);
  const SigmaDeltaDesign d = design_sd_dfrc(sys, cfg);
  const double rho = sigma_delta_norm_budget(16);
  CHECK(rho == doctest::Approx(32.0 / 9.0));
  REQUIRE(d.lambdas.size() == 20);
  const ColumnSolver solver(sys.F);
  for (Eigen::Index l = 0; l < 20; ++l) {
    CHECK(d.xbar.entries.col(l).squaredNorm() <= rho * (1 + 1e-9));
    const ColumnSolveResult r = solver.solve(sys.B.col(l), rho);
    CHECK((r.x - d.xbar.entries.col(l)).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK(is_one_bit(d.record.output.entries));
  CHECK(d.overloads == d.record.overload_count());
  CHECK_THROWS_AS((design_sd_dfrc(sys, ArrayConfig{8, 0.125})), ContractError);
}
