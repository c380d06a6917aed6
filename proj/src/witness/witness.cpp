#include "gwb/witness/witness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gwb/error.hpp"
#include "gwb/relations/relations.hpp"

namespace gwb::witness {

using numeric::BigComplex;
using numeric::CMat;
using numeric::CVec;
using numeric::PolySystem;
using numeric::Real;

CVec CPoint::stacked() const {
  const auto n = static_cast<Eigen::Index>(x.size());
  CVec z(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    z[i] = x[static_cast<std::size_t>(i)];
    z[n + i] = y[static_cast<std::size_t>(i)];
  }
  return z;
}

CPoint CPoint::unstack(const CVec& z) {
  const Eigen::Index n = z.size() / 2;
  CPoint p;
  for (Eigen::Index i = 0; i < n; ++i) {
    p.x.push_back(z[i]);
    p.y.push_back(z[n + i]);
  }
  return p;
}

namespace {

PolySystem system_of(const GSubvariety& v) { return PolySystem(v.groebner(), 2 * v.n()); }

void require_dense_lattice(const HSpec& h) {
  auto basis = h.basis;
  std::sort(basis.begin(), basis.end());
  if (h.kind != HSpec::Kind::LatticeExp || basis != std::vector<std::string>{"1", "2*pi*i"})
    throw Error(ErrorCode::UnsupportedHSpec, "witnesses need H = LatticeExp{1, 2*pi*i}");
}

void check_shape(const GSubvariety& v, const CPoint& a) {
  if (a.x.size() != v.n() || a.y.size() != v.n())
    throw Error(ErrorCode::InvalidArgument, "point has the wrong number of coordinates");
}

double residual_at(const PolySystem& sys, const CVec& z) {
  CVec f = sys.evaluate(z);
  return f.size() ? f.cwiseAbs().maxCoeff() : 0.0;
}

cd h_double(const HExponent& e) { return h_value(e).to_complex(); }

/// Gamma equations y_i - h_i exp(x_i) appended to V's equations.
struct WitnessSystem {
  const PolySystem& sys;
  std::vector<cd> h;

  CVec operator()(const CVec& z) const {
    const auto n = static_cast<Eigen::Index>(h.size());
    const auto m = static_cast<Eigen::Index>(sys.size());
    CVec out(m + n);
    out.head(m) = sys.evaluate(z);
    for (Eigen::Index i = 0; i < n; ++i) out[m + i] = z[n + i] - h[static_cast<std::size_t>(i)] * std::exp(z[i]);
    return out;
  }
  CMat jacobian(const CVec& z) const {
    const auto n = static_cast<Eigen::Index>(h.size());
    const auto m = static_cast<Eigen::Index>(sys.size());
    CMat out = CMat::Zero(m + n, 2 * n);
    out.topRows(m) = sys.jacobian(z);
    for (Eigen::Index i = 0; i < n; ++i) {
      out(m + i, i) = -h[static_cast<std::size_t>(i)] * std::exp(z[i]);
      out(m + i, n + i) = 1.0;
    }
    return out;
  }
};

/// Greedy choice of independent rows of V's Jacobian.
std::vector<std::size_t> independent_rows(const CMat& jac, std::size_t want) {
  std::vector<std::size_t> rows;
  for (Eigen::Index r = 0; r < jac.rows() && rows.size() < want; ++r) {
    CMat trial(static_cast<Eigen::Index>(rows.size() + 1), jac.cols());
    for (std::size_t k = 0; k < rows.size(); ++k) trial.row(static_cast<Eigen::Index>(k)) = jac.row(static_cast<Eigen::Index>(rows[k]));
    trial.row(static_cast<Eigen::Index>(rows.size())) = jac.row(r);
    if (numeric::numerical_rank(trial, 1e-9) == rows.size() + 1) rows.push_back(static_cast<std::size_t>(r));
  }
  return rows;
}

/// Newton on the square system (independent rows of V, Gamma equations) in
/// extended precision.
CVec polish(const PolySystem& sys, const std::vector<HExponent>& hexp, const CVec& z0, int iterations) {
  const std::size_t n = hexp.size();
  auto rows = independent_rows(sys.jacobian(z0), n);
  if (rows.size() != n) return z0;
  std::vector<BigComplex> h;
  for (const auto& e : hexp) h.push_back(h_value(e));
  std::vector<BigComplex> z;
  for (Eigen::Index i = 0; i < z0.size(); ++i) z.emplace_back(z0[i]);
  const Real stop = boost::multiprecision::pow(Real(10), -40);
  for (int it = 0; it < iterations; ++it) {
    auto f = sys.evaluate_rows(z, rows);
    auto j = sys.jacobian(z, rows);
    for (std::size_t i = 0; i < n; ++i) {
      BigComplex he = h[i] * numeric::exp(z[i]);
      f.push_back(z[n + i] - he);
      std::vector<BigComplex> row(2 * n);
      row[i] = -he;
      row[n + i] = BigComplex(Real(1));
      j.push_back(std::move(row));
    }
    for (auto& v : f) v = -v;
    std::vector<BigComplex> dz;
    try {
      dz = numeric::solve_big(std::move(j), std::move(f));
    } catch (const Error&) {
      return z0;
    }
    Real step = 0;
    for (std::size_t c = 0; c < 2 * n; ++c) {
      z[c] += dz[c];
      step = std::max(step, numeric::abs(dz[c]));
    }
    if (step < stop) break;
  }
  CVec out(z0.size());
  for (std::size_t c = 0; c < z.size(); ++c) out[static_cast<Eigen::Index>(c)] = z[c].to_complex();
  return out;
}

bool finite_point(const CPoint& p) {
  auto ok = [](cd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return std::all_of(p.x.begin(), p.x.end(), ok) && std::all_of(p.y.begin(), p.y.end(), ok) &&
         std::none_of(p.y.begin(), p.y.end(), [](cd z) { return z == cd(0); });
}

}  // namespace

CPoint find_regular_point(const GSubvariety& v, std::uint64_t seed, const numeric::SampleOptions& options) {
  PolySystem sys = system_of(v);
  std::vector<std::size_t> units;
  for (std::size_t i = 0; i < v.n(); ++i) units.push_back(v.y(i));
  numeric::SampleStats stats;
  auto p = numeric::sample_regular_point(sys, static_cast<std::size_t>(v.dimension()), units, seed,
                                         options, {}, &stats);
  if (!p) {
    if (stats.converged > 0 && stats.singular == stats.converged)
      throw Error(ErrorCode::SingularLocusOnly, "every converged sample failed the rank test");
    throw Error(ErrorCode::MaxRestartsExceeded,
                "no regular point after " + std::to_string(stats.attempts) + " starts");
  }
  return CPoint::unstack(p->point);
}

int fiber_tangent_overlap(const GSubvariety& v, const CPoint& a, double tol) {
  check_shape(v, a);
  PolySystem sys = system_of(v);
  CVec z = a.stacked();
  double scale = 1.0 + z.cwiseAbs().maxCoeff();
  if (residual_at(sys, z) > tol * scale) throw Error(ErrorCode::PointNotOnVariety, "point is not on V");
  const auto n = static_cast<Eigen::Index>(v.n());
  const auto m = static_cast<Eigen::Index>(sys.size());
  // The fibre {(x, t exp x)} has tangent dy_i = y_i dx_i.
  CMat j = CMat::Zero(m + n, 2 * n);
  j.topRows(m) = sys.jacobian(z);
  for (Eigen::Index i = 0; i < n; ++i) {
    j(m + i, i) = -z[n + i];
    j(m + i, n + i) = 1.0;
  }
  return static_cast<int>(2 * n) - static_cast<int>(numeric::numerical_rank(j, 1e-8));
}

bool check_fiber_transversality(const GSubvariety& v, const CPoint& a, double tol) {
  return fiber_tangent_overlap(v, a, tol) == 0;
}

std::vector<HExponent> approximate_in_H(const std::vector<cd>& t, const HSpec& h, long qmax, double eps) {
  require_dense_lattice(h);
  if (qmax < 1) throw Error(ErrorCode::InvalidArgument, "Qmax must be at least 1");
  std::vector<HExponent> out;
  Real worst = 0;
  for (cd ti : t) {
    if (ti == cd(0) || !std::isfinite(ti.real()) || !std::isfinite(ti.imag()))
      throw Error(ErrorCode::InvalidArgument, "values must be finite and nonzero");
    BigComplex l = numeric::log(BigComplex(ti));
    Rat p = relations::best_rational_approximation(l.re, qmax);
    Rat r = relations::best_rational_approximation(l.im / numeric::two_pi(), qmax);
    BigComplex approx(numeric::to_real(p), numeric::to_real(r) * numeric::two_pi());
    worst = std::max(worst, numeric::abs(l - approx));
    out.emplace_back(p, r);
  }
  if (worst >= Real(eps)) {
    std::ostringstream msg;
    msg << "eps " << eps << " unreachable with Qmax " << qmax << "; best achievable "
        << static_cast<double>(worst);
    throw Error(ErrorCode::PrecisionUnreachable, msg.str());
  }
  return out;
}

BigComplex h_value(const HExponent& e) {
  return numeric::exp(BigComplex(numeric::to_real(e.first), numeric::to_real(e.second) * numeric::two_pi()));
}

std::pair<Real, Real> witness_residuals(const GSubvariety& v, const CPoint& point,
                                        const std::vector<HExponent>& h) {
  check_shape(v, point);
  PolySystem sys = system_of(v);
  std::vector<BigComplex> z;
  for (cd c : point.x) z.emplace_back(c);
  for (cd c : point.y) z.emplace_back(c);
  Real rv = 0, rg = 0;
  for (const auto& f : sys.evaluate(z)) rv = std::max(rv, numeric::abs(f));
  for (std::size_t i = 0; i < v.n(); ++i) {
    BigComplex d = z[v.n() + i] - h_value(h[i]) * numeric::exp(z[i]);
    rg = std::max(rg, numeric::abs(d));
  }
  return {rv, rg};
}

WitnessReport find_witness(const GSubvariety& v, const HSpec& h, std::uint64_t seed,
                           const WitnessOptions& options) {
  require_dense_lattice(h);
  const std::size_t n = v.n();
  if (v.dimension() != static_cast<int>(n))
    throw Error(ErrorCode::InvalidArgument, "V must have dimension n");
  if (options.forced_h && options.forced_h->size() != n)
    throw Error(ErrorCode::InvalidArgument, "forced h has the wrong length");
  if (options.start) check_shape(v, *options.start);
  PolySystem sys = system_of(v);

  WitnessReport report;
  report.seed = seed;
  report.tol = options.tol;
  report.qmax = options.qmax;
  bool transversal_seen = false;
  const int restarts = (options.forced_h && options.start) ? 1 : std::max(options.restarts, 1);

  for (int restart = 0; restart < restarts; ++restart) {
    std::vector<HExponent> hexp;
    CVec start;
    if (options.forced_h && options.start) {
      hexp = *options.forced_h;
      start = options.start->stacked();
      transversal_seen = true;
    } else {
      CPoint a = find_regular_point(v, numeric::mix_seed(seed, 0x5749, static_cast<std::uint64_t>(restart)),
                                    options.sampling);
      int overlap = fiber_tangent_overlap(v, a, options.on_variety_tol);
      if (overlap > 0) {
        // Ax: td(x, y / C) - rank >= dim, so a persistent overlap points at a
        // failure of rotundity rather than a bad sample.
        report.log.push_back("restart " + std::to_string(restart) + ": fibre tangent meets T_aV in dimension " +
                             std::to_string(overlap));
        continue;
      }
      transversal_seen = true;
      if (options.forced_h) {
        hexp = *options.forced_h;
      } else {
        std::vector<cd> theta;
        for (std::size_t i = 0; i < n; ++i) theta.push_back(a.y[i] / std::exp(a.x[i]));
        hexp = approximate_in_H(theta, h, options.qmax, options.h_eps);
      }
      start = options.start ? options.start->stacked() : a.stacked();
    }
    for (const auto& e : hexp)
      if (e.first.get_den() > options.qmax || e.second.get_den() > options.qmax)
        throw Error(ErrorCode::InvalidArgument, "h exponent denominator exceeds Qmax");

    WitnessSystem ws{sys, {}};
    for (const auto& e : hexp) ws.h.push_back(h_double(e));
    auto f = [&](const CVec& z) { return ws(z); };
    auto jac = [&](const CVec& z) { return ws.jacobian(z); };
    numeric::NewtonResult nr =
        numeric::gauss_newton(f, jac, start, options.newton_iterations, options.tol, options.step_cap);
    if (!nr.converged) {
      report.log.push_back("restart " + std::to_string(restart) + ": Newton stalled at residual " +
                           std::to_string(nr.residual));
      continue;
    }
    CVec z = polish(sys, hexp, nr.point, options.polish_iterations);
    CPoint point = CPoint::unstack(z);
    if (!finite_point(point)) continue;
    auto [rv, rg] = witness_residuals(v, point, hexp);
    if (rv >= Real(options.tol) || rg >= Real(options.tol)) {
      report.log.push_back("restart " + std::to_string(restart) + ": residuals above tol after polish");
      continue;
    }
    // Condition number of the square system actually solved.
    CMat full = ws.jacobian(z);
    auto rows = independent_rows(sys.jacobian(z), n);
    CMat sq(static_cast<Eigen::Index>(rows.size() + n), static_cast<Eigen::Index>(2 * n));
    for (std::size_t k = 0; k < rows.size(); ++k) sq.row(static_cast<Eigen::Index>(k)) = full.row(static_cast<Eigen::Index>(rows[k]));
    sq.bottomRows(static_cast<Eigen::Index>(n)) = full.bottomRows(static_cast<Eigen::Index>(n));

    report.point = std::move(point);
    report.h_exponents = std::move(hexp);
    report.residual_variety = static_cast<double>(rv);
    report.residual_gamma = static_cast<double>(rg);
    report.jacobian_condition = numeric::condition_number(sq);
    report.iterations = nr.iterations;
    report.restart = restart;
    return report;
  }
  if (!transversal_seen)
    throw Error(ErrorCode::NoTransversalPoint,
                "no transversal regular point in " + std::to_string(restarts) + " restarts; V is likely not rotund");
  throw Error(ErrorCode::NewtonDiverged, "Newton failed on every transversal start");
}

bool verify_witness(const WitnessReport& r, const GSubvariety& v, const HSpec& h) {
  try {
    require_dense_lattice(h);
  } catch (const Error&) {
    return false;
  }
  const std::size_t n = v.n();
  if (r.point.x.size() != n || r.point.y.size() != n || r.h_exponents.size() != n) return false;
  if (!finite_point(r.point) || !(r.tol > 0)) return false;
  for (const auto& e : r.h_exponents)
    if (e.first.get_den() > r.qmax || e.second.get_den() > r.qmax) return false;
  auto [rv, rg] = witness_residuals(v, r.point, r.h_exponents);
  Real bound = Real(10) * Real(r.tol);
  return rv < bound && rg < bound;
}

}  // namespace gwb::witness
