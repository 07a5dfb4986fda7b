// SPDX-License-Identifier: Apache-2.0
//
// sddfrc - one-bit sigma-delta DFRC waveform design toolkit
// ------------------------------------------------------------------------

#include "sddfrc/covariance_design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace sddfrc {

namespace {

// ---------------------------------------------------------------------------
// Conic form solved by the interior-point method, in units of the power cap:
//
//   min -tau   s.t.  g_i - sum_p w_ip v_{k_ip}^H C v_{k_ip} - y_i tau = d_i,
//                    C >= 0 (PSD block),  (g, tau) >= 0 (linear block)
//
// Each row touches at most two atoms v_k (steering or unit vectors), so the
// Schur complement only needs W1 = V^H C V and W2 = V^H S^{-1} V.
// ---------------------------------------------------------------------------

enum class Kind { sidelobe, mainlobe_upper, mainlobe_lower, diagonal, gap_vs_zero };

struct Row {
  int atom[2] = {0, 0};
  double weight[2] = {0.0, 0.0};
  int atoms = 0;
  double tau_coef = 0.0;
  Kind kind = Kind::sidelobe;
  double where = 0.0;  // angle or antenna index, for reporting
};

struct Problem {
  CMatrix V;              // N x a
  std::vector<Row> rows;  // m
  RVector d;              // m

  Eigen::Index m() const { return static_cast<Eigen::Index>(rows.size()); }
  Eigen::Index n() const { return V.rows(); }
};

std::string describe(const Row& r) {
  std::ostringstream os;
  switch (r.kind) {
    case Kind::sidelobe: os << "sidelobe gap at " << r.where << " deg"; break;
    case Kind::mainlobe_upper: os << "mainlobe upper ripple at " << r.where << " deg"; break;
    case Kind::mainlobe_lower: os << "mainlobe lower ripple at " << r.where << " deg"; break;
    case Kind::diagonal: os << "power cap on antenna " << static_cast<int>(r.where); break;
    case Kind::gap_vs_zero: os << "mainlobe power gap"; break;
  }
  return os.str();
}

// Iterate: primal (X, u = [g; tau]), dual (y, S, s).
struct Iterate {
  CMatrix X;
  RVector u;
  RVector y;
  CMatrix S;
  RVector s;
};

// Re(v_k^H Z v_k) for every atom; Z need not be Hermitian.
RVector atom_forms(const Problem& pb, const CMatrix& Z) {
  const CMatrix ZV = Z * pb.V;
  RVector q(pb.V.cols());
  for (Eigen::Index k = 0; k < pb.V.cols(); ++k) q(k) = pb.V.col(k).dot(ZV.col(k)).real();
  return q;
}

// A(Z, w): row i = -sum_p w_ip Re(v^H Z v) + w_i - y_i w_tau
RVector apply_A(const Problem& pb, const CMatrix& Z, const RVector& w) {
  const RVector q = atom_forms(pb, Z);
  const Eigen::Index m = pb.m();
  RVector out(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Row& r = pb.rows[static_cast<std::size_t>(i)];
    double acc = w(i) - r.tau_coef * w(m);
    for (int p = 0; p < r.atoms; ++p) acc -= r.weight[p] * q(r.atom[p]);
    out(i) = acc;
  }
  return out;
}

// A^T y: PSD part -sum_i y_i G_i, linear part (y, -sum_i tau_coef_i y_i).
void apply_AT(const Problem& pb, const RVector& y, CMatrix& Z, RVector& w) {
  const Eigen::Index m = pb.m();
  RVector gamma = RVector::Zero(pb.V.cols());
  w.resize(m + 1);
  double tau = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Row& r = pb.rows[static_cast<std::size_t>(i)];
    for (int p = 0; p < r.atoms; ++p) gamma(r.atom[p]) -= r.weight[p] * y(i);
    w(i) = y(i);
    tau -= r.tau_coef * y(i);
  }
  w(m) = tau;
  Z = pb.V * gamma.asDiagonal() * pb.V.adjoint();
}

CMatrix herm(const CMatrix& Z) { return 0.5 * (Z + Z.adjoint()); }

double inner(const CMatrix& A, const CMatrix& B) { return (A.adjoint().cwiseProduct(B.transpose())).sum().real(); }

// Largest alpha in (0, inf] with X + alpha dX >= 0 (X > 0).
double psd_step(const CMatrix& X, const CMatrix& dX) {
  Eigen::LLT<CMatrix> llt(X);
  const CMatrix half = llt.matrixL().solve(dX);
  const CMatrix whitened = herm(llt.matrixL().solve(half.adjoint()));
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(whitened, Eigen::EigenvaluesOnly);
  const double lmin = eig.eigenvalues().minCoeff();
  return lmin < 0.0 ? -1.0 / lmin : std::numeric_limits<double>::infinity();
}

double linear_step(const RVector& u, const RVector& du) {
  double a = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < u.size(); ++i)
    if (du(i) < 0.0) a = std::min(a, -u(i) / du(i));
  return a;
}

struct Infeasible {};

struct Direction {
  CMatrix dX, dS;
  RVector du, dy, ds;
};

class PrimalDual {
 public:
  // objective: -1 maximises the scalar variable, +1 minimises it
  PrimalDual(const Problem& pb, const SolverOptions& opts, double objective = -1.0) : pb_(pb), opts_(opts) {
    m_ = pb.m();
    c_ = RVector::Zero(m_ + 1);
    c_(m_) = objective;
  }

  struct Outcome {
    Iterate x;
    SolverResiduals residuals;
  };

  Outcome run() {
    const Eigen::Index N = pb_.n();
    Iterate it;
    const double scale = std::max(1.0, pb_.d.cwiseAbs().maxCoeff());
    it.X = CMatrix::Identity(N, N);
    it.u = RVector::Constant(m_ + 1, scale);
    it.y = RVector::Zero(m_);
    it.S = scale * CMatrix::Identity(N, N);
    it.s = RVector::Constant(m_ + 1, 1.0);

    const double nu = static_cast<double>(N + m_ + 1);
    const double bnorm = 1.0 + pb_.d.norm();
    const double cnorm = 1.0 + c_.norm();
    SolverResiduals res;
    // Best iterate so far; returned if the iteration breaks down numerically
    // once it is already accurate to within kAcceptable.
    constexpr double kAcceptable = 1e-6;
    Iterate best;
    SolverResiduals best_res;
    double best_score = std::numeric_limits<double>::infinity();
    auto fallback = [&](const char* why) -> Outcome {
      if (best_score <= kAcceptable) return {best, best_res};
      throw ConvergenceError(std::string("beampattern design: ") + why, res);
    };
    for (int iter = 0; iter < opts_.max_iterations; ++iter) {
      // Residuals
      const RVector Rp = pb_.d - apply_A(pb_, it.X, it.u);
      CMatrix ATy;
      RVector ATy_l;
      apply_AT(pb_, it.y, ATy, ATy_l);
      const CMatrix RdX = -it.S - ATy;
      const RVector Rdl = c_ - it.s - ATy_l;
      const double gap = inner(it.X, it.S) + it.u.dot(it.s);
      const double pobj = c_.dot(it.u);
      const double dobj = pb_.d.dot(it.y);
      res.iterations = iter;
      res.primal_residual = Rp.norm() / bnorm;
      res.dual_residual = std::sqrt(RdX.squaredNorm() + Rdl.squaredNorm()) / cnorm;
      res.duality_gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
      if (res.primal_residual <= opts_.tolerance && res.dual_residual <= opts_.tolerance &&
          res.duality_gap <= opts_.tolerance && gap / nu <= opts_.tolerance * scale)
        return {it, res};
      if (!std::isfinite(gap)) return fallback("non-finite iterate");
      const double score = std::max({res.primal_residual, res.dual_residual, res.duality_gap});
      if (score < best_score) {
        best_score = score;
        best = it;
        best_res = res;
      }

      // Primal infeasibility certificate: b^T y > 0 with A^T y + S ~ 0.
      if (dobj > 0.0) {
        const double cert = std::sqrt((ATy + it.S).squaredNorm() + (ATy_l + it.s).squaredNorm()) / dobj;
        if (cert <= 1e-8 && res.primal_residual > opts_.tolerance) throw Infeasible{};
      }

      const double mu = gap / nu;
      if (!factor(it)) return fallback("dual matrix lost positive definiteness");

      // Predictor
      const Direction aff = solve(it, Rp, RdX, Rdl, 0.0, nullptr);
      double ap = std::min(1.0, std::min(psd_step(it.X, aff.dX), linear_step(it.u, aff.du)));
      double ad = std::min(1.0, std::min(psd_step(it.S, aff.dS), linear_step(it.s, aff.ds)));
      const double mu_aff = (inner(it.X + ap * aff.dX, it.S + ad * aff.dS) +
                             (it.u + ap * aff.du).dot(it.s + ad * aff.ds)) / nu;
      const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

      // Corrector
      const Direction dir = solve(it, Rp, RdX, Rdl, sigma * mu, &aff);
      const double gamma = std::max(0.9, 1.0 - 10.0 * mu / scale);
      ap = std::min(1.0, gamma * std::min(psd_step(it.X, dir.dX), linear_step(it.u, dir.du)));
      ad = std::min(1.0, gamma * std::min(psd_step(it.S, dir.dS), linear_step(it.s, dir.ds)));

      it.X = herm(it.X + ap * dir.dX);
      it.u += ap * dir.du;
      it.S = herm(it.S + ad * dir.dS);
      it.y += ad * dir.dy;
      it.s += ad * dir.ds;
    }
    return fallback("interior-point iteration cap reached");
  }

 private:
  bool factor(const Iterate& it) {
    Eigen::LLT<CMatrix> llt(it.S);
    if (llt.info() != Eigen::Success) return false;
    Sinv_ = herm(llt.solve(CMatrix::Identity(it.S.rows(), it.S.cols())));
    const CMatrix W1 = pb_.V.adjoint() * it.X * pb_.V;
    const CMatrix W2 = pb_.V.adjoint() * Sinv_ * pb_.V;
    const RMatrix E = (W1.cwiseProduct(W2.transpose())).real();
    M_.resize(m_, m_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Row& ri = pb_.rows[static_cast<std::size_t>(i)];
      for (Eigen::Index j = 0; j <= i; ++j) {
        const Row& rj = pb_.rows[static_cast<std::size_t>(j)];
        double acc = 0.0;
        for (int p = 0; p < ri.atoms; ++p)
          for (int q = 0; q < rj.atoms; ++q) acc += ri.weight[p] * rj.weight[q] * E(ri.atom[p], rj.atom[q]);
        acc += ri.tau_coef * rj.tau_coef * it.u(m_) / it.s(m_);
        M_(i, j) = acc;
        M_(j, i) = acc;
      }
      M_(i, i) += it.u(i) / it.s(i);
    }
    equil_ = M_.diagonal().cwiseSqrt().cwiseInverse();
    chol_.compute(equil_.asDiagonal() * M_ * equil_.asDiagonal());
    return chol_.info() == Eigen::Success;
  }

  // HKM direction with complementarity target `target` (sigma * mu) and an optional
  // second-order correction from the predictor step.
  Direction solve(const Iterate& it, const RVector& Rp, const CMatrix& RdX, const RVector& Rdl,
                  double target, const Direction* corr) const {
    // H_X = target S^{-1} - X - corr_X S^{-1} - X RdX S^{-1}
    CMatrix HX = target * Sinv_ - it.X - it.X * RdX * Sinv_;
    if (corr) HX -= corr->dX * corr->dS * Sinv_;
    RVector Hl(m_ + 1);
    for (Eigen::Index k = 0; k <= m_; ++k) {
      double v = target / it.s(k) - it.u(k) - it.u(k) * Rdl(k) / it.s(k);
      if (corr) v -= corr->du(k) * corr->ds(k) / it.s(k);
      Hl(k) = v;
    }
    const RVector rhs = Rp - apply_A(pb_, HX, Hl);
    Direction d;
    d.dy = equil_.asDiagonal() * chol_.solve(equil_.asDiagonal() * rhs);
    CMatrix ATdy;
    RVector ATdy_l;
    auto expand = [&] {
      apply_AT(pb_, d.dy, ATdy, ATdy_l);
      d.dX = herm(HX + it.X * ATdy * Sinv_);
      d.du = Hl + it.u.cwiseProduct(ATdy_l).cwiseQuotient(it.s);
    };
    expand();
    // The Schur matrix becomes ill-conditioned near a rank-deficient optimum. A couple of
    // refinement steps against the exact operator pull A(dX, du) back towards Rp; beyond
    // that the residual sits at the rounding floor of X Z S^{-1}, so keep the best dy.
    RVector r = Rp - apply_A(pb_, d.dX, d.du);
    RVector best_dy = d.dy;
    double best_r = r.norm();
    for (int refine = 0; refine < 2 && best_r > 1e-3 * opts_.tolerance * (1.0 + Rp.norm()); ++refine) {
      d.dy += equil_.asDiagonal() * chol_.solve(equil_.asDiagonal() * r);
      expand();
      r = Rp - apply_A(pb_, d.dX, d.du);
      if (r.norm() < best_r) {
        best_r = r.norm();
        best_dy = d.dy;
      }
    }
    if (best_dy != d.dy) {
      d.dy = best_dy;
      expand();
    }
    d.dS = herm(RdX - ATdy);
    d.ds = Rdl - ATdy_l;
    return d;
  }

  const Problem& pb_;
  SolverOptions opts_;
  Eigen::Index m_ = 0;
  RVector c_;
  CMatrix Sinv_;
  RMatrix M_;
  RVector equil_;
  Eigen::LLT<RMatrix> chol_;
};

// Problem assembly in units of the power cap (p = 1).
struct Assembly {
  Problem pb;
  int theta0_atom = 0;
};

Assembly assemble(const DesignSpec& spec, const ArrayConfig& cfg) {
  const double p = spec.power_cap;
  const int N = cfg.n_antennas;
  std::vector<CVector> atoms;
  atoms.push_back(steering_vector(spec.theta0, cfg));

  auto offset_at = [&](std::size_t gi) {
    return spec.noise_offset ? spec.noise_offset->power(static_cast<Eigen::Index>(gi)) / p : 0.0;
  };
  double d0 = 0.0;
  if (spec.noise_offset) {
    const auto it = std::find(spec.grid.angles.begin(), spec.grid.angles.end(), spec.theta0);
    d0 = offset_at(static_cast<std::size_t>(it - spec.grid.angles.begin()));
  }

  std::vector<Row> rows;
  std::vector<double> tau_coef;
  std::vector<double> dvec;
  const double eps = spec.ripple;
  bool any_sidelobe = false;
  for (std::size_t gi = 0; gi < spec.grid.size(); ++gi) {
    const double ang = spec.grid.angles[gi];
    if (!spec.grid.sidelobe[gi] && !spec.grid.mainlobe[gi]) continue;
    if (spec.grid.mainlobe[gi] && std::abs(ang - spec.theta0) < 1e-12) continue;
    const int k = static_cast<int>(atoms.size());
    atoms.push_back(steering_vector(ang, cfg));
    const double dk = offset_at(gi);
    if (spec.grid.sidelobe[gi]) {
      any_sidelobe = true;
      Row r;
      r.atoms = 2;
      r.atom[0] = 0, r.weight[0] = 1.0;
      r.atom[1] = k, r.weight[1] = -1.0;
      r.kind = Kind::sidelobe;
      r.where = ang;
      rows.push_back(r);
      tau_coef.push_back(-1.0);
      dvec.push_back(d0 - dk);
    } else {
      Row up;
      up.atoms = 2;
      up.atom[0] = 0, up.weight[0] = 1.0 + eps;
      up.atom[1] = k, up.weight[1] = -1.0;
      up.kind = Kind::mainlobe_upper;
      up.where = ang;
      rows.push_back(up);
      tau_coef.push_back(0.0);
      dvec.push_back((1.0 + eps) * d0 - dk);
      Row lo;
      lo.atoms = 2;
      lo.atom[0] = k, lo.weight[0] = 1.0;
      lo.atom[1] = 0, lo.weight[1] = -(1.0 - eps);
      lo.kind = Kind::mainlobe_lower;
      lo.where = ang;
      rows.push_back(lo);
      tau_coef.push_back(0.0);
      dvec.push_back(dk - (1.0 - eps) * d0);
    }
  }
  if (!any_sidelobe) {
    Row r;
    r.atoms = 1;
    r.atom[0] = 0, r.weight[0] = 1.0;
    r.kind = Kind::gap_vs_zero;
    rows.push_back(r);
    tau_coef.push_back(-1.0);
    dvec.push_back(d0);
  }
  for (int n = 0; n < N; ++n) {
    const int k = static_cast<int>(atoms.size());
    CVector e = CVector::Zero(N);
    e(n) = 1.0;
    atoms.push_back(e);
    Row r;
    r.atoms = 1;
    r.atom[0] = k, r.weight[0] = -1.0;
    r.kind = Kind::diagonal;
    r.where = n;
    rows.push_back(r);
    tau_coef.push_back(0.0);
    dvec.push_back(1.0);
  }
  Assembly as;
  as.pb.V.resize(N, static_cast<Eigen::Index>(atoms.size()));
  for (std::size_t k = 0; k < atoms.size(); ++k) as.pb.V.col(static_cast<Eigen::Index>(k)) = atoms[k];
  as.pb.rows = std::move(rows);
  const auto m = static_cast<Eigen::Index>(dvec.size());
  as.pb.d.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    as.pb.rows[static_cast<std::size_t>(i)].tau_coef = tau_coef[static_cast<std::size_t>(i)];
    as.pb.d(i) = dvec[static_cast<std::size_t>(i)];
  }
  return as;
}

// Called once the main problem is certified infeasible: minimise the largest
// violation t of the pattern rows (power caps kept hard) and report the row
// that attains it, in the caller's power units.
[[noreturn]] void least_violation(const Problem& pb, double power_cap, const SolverOptions& opts) {
  Problem ph = pb;
  for (auto& r : ph.rows) r.tau_coef = r.kind == Kind::diagonal ? 0.0 : 1.0;
  std::size_t worst = 0;
  double t = std::numeric_limits<double>::quiet_NaN();
  try {
    const auto sol = PrimalDual(ph, opts, 1.0).run();
    t = sol.x.u(ph.m());
    double smallest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ph.rows.size(); ++i) {
      if (ph.rows[i].kind == Kind::diagonal) continue;
      const double slack = sol.x.u(static_cast<Eigen::Index>(i));
      if (slack < smallest) {
        smallest = slack;
        worst = i;
      }
    }
  } catch (const std::exception&) {
  }
  throw InfeasibleError("beampattern design is infeasible: no covariance satisfies every constraint",
                        describe(pb.rows[worst]), power_cap * t);
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
  const auto* b = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= b[i];
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace

double mainlobe_midpoint(const AngleGrid& grid) {
  const auto ml = grid.mainlobe_angles();
  if (ml.empty()) throw ContractError("mainlobe_midpoint: grid has an empty mainlobe");
  return 0.5 * (ml.front() + ml.back());
}

void DesignSpec::validate(const ArrayConfig& cfg) const {
  cfg.validate();
  grid.validate();
  if (grid.mainlobe_angles().empty()) throw ContractError("DesignSpec: mainlobe is empty");
  if (!(ripple >= 0.0)) throw ContractError("DesignSpec: ripple must be >= 0");
  if (!(power_cap > 0.0)) throw ContractError("DesignSpec: power cap must be positive");
  const auto ml = grid.mainlobe_angles();
  if (!(theta0 >= ml.front() && theta0 <= ml.back()))
    throw ContractError("DesignSpec: theta0 lies outside the mainlobe");
  if (ripple == 0.0) {
    for (double a : ml)
      if (std::abs(a - theta0) >= 1e-12)
        throw ContractError("DesignSpec: zero ripple with a multi-angle mainlobe has no interior; use ripple > 0");
  }
  if (noise_offset) {
    if (noise_offset->grid.angles != grid.angles ||
        noise_offset->power.size() != static_cast<Eigen::Index>(grid.size()))
      throw ContractError("DesignSpec: noise offset is not on the design grid");
    if (std::find(grid.angles.begin(), grid.angles.end(), theta0) == grid.angles.end())
      throw ContractError("DesignSpec: theta0 must be a grid angle when a noise offset is used");
  }
}

std::uint64_t DesignSpec::hash() const {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    h = fnv1a(h, &grid.angles[i], sizeof(double));
    const unsigned char flags = static_cast<unsigned char>((grid.mainlobe[i] ? 1 : 0) | (grid.sidelobe[i] ? 2 : 0));
    h = fnv1a(h, &flags, 1);
  }
  h = fnv1a(h, &theta0, sizeof theta0);
  h = fnv1a(h, &ripple, sizeof ripple);
  h = fnv1a(h, &power_cap, sizeof power_cap);
  const unsigned char has_offset = noise_offset ? 1 : 0;
  h = fnv1a(h, &has_offset, 1);
  if (noise_offset)
    h = fnv1a(h, noise_offset->power.data(), sizeof(double) * static_cast<std::size_t>(noise_offset->power.size()));
  return h;
}

DesignResult solve_beampattern_design(const DesignSpec& spec, const ArrayConfig& cfg, const SolverOptions& opts) {
  spec.validate(cfg);
  Assembly as = assemble(spec, cfg);
  PrimalDual::Outcome sol;
  try {
    sol = PrimalDual(as.pb, opts).run();
  } catch (const Infeasible&) {
    least_violation(as.pb, spec.power_cap, opts);
  }

  DesignResult out;
  out.covariance = spec.power_cap * herm(sol.x.X);
  out.tau = spec.power_cap * std::max(0.0, sol.x.u(as.pb.m()));
  out.residuals = sol.residuals;
  return out;
}

ConstraintReport check_design(const DesignSpec& spec, const ArrayConfig& cfg, const CMatrix& C, double tau) {
  ConstraintReport rep;
  rep.max_violation = -std::numeric_limits<double>::infinity();
  auto note = [&](double v, const std::string& what) {
    if (v > rep.max_violation) {
      rep.max_violation = v;
      rep.worst = what;
    }
  };
  Beampattern P = analytic_pattern(C, spec.grid, cfg);
  if (spec.noise_offset) P.power += spec.noise_offset->power;
  AngleGrid single = AngleGrid::uniform(spec.theta0, spec.theta0, 1.0);
  double p0 = analytic_pattern(C, single, cfg).power(0);
  if (spec.noise_offset) {
    const auto it = std::find(spec.grid.angles.begin(), spec.grid.angles.end(), spec.theta0);
    p0 += spec.noise_offset->power(static_cast<Eigen::Index>(it - spec.grid.angles.begin()));
  }
  bool any_sidelobe = false;
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    const double Pi = P.power(static_cast<Eigen::Index>(i));
    const std::string at = std::to_string(spec.grid.angles[i]);
    if (spec.grid.sidelobe[i]) {
      any_sidelobe = true;
      note(tau - (p0 - Pi), "sidelobe gap at " + at);
    }
    if (spec.grid.mainlobe[i]) {
      note(Pi - (1.0 + spec.ripple) * p0, "mainlobe upper ripple at " + at);
      note((1.0 - spec.ripple) * p0 - Pi, "mainlobe lower ripple at " + at);
    }
  }
  if (!any_sidelobe) note(tau - p0, "mainlobe power gap");
  note(-tau, "tau >= 0");
  for (Eigen::Index n = 0; n < C.rows(); ++n) note(C(n, n).real() - spec.power_cap, "power cap on antenna " + std::to_string(n));
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(0.5 * (C + C.adjoint()), Eigen::EigenvaluesOnly);
  note(-eig.eigenvalues().minCoeff(), "positive semidefiniteness");
  return rep;
}

}  // namespace sddfrc
