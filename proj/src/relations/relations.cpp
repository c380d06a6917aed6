#include "gwb/relations/relations.hpp"

#include <algorithm>

#include "gwb/algebra/intmat.hpp"
#include "gwb/error.hpp"

namespace gwb::relations {

namespace {

Real power_of_ten(int k) { return boost::multiprecision::pow(Real(10), k); }

void check_precision(const RelationOptions& options) {
  if (options.tol <= 0) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (options.bound < 1) throw Error(ErrorCode::InvalidArgument, "coefficient bound must be positive");
  if (options.digits < 4 || options.digits > numeric::kMaxDigits)
    throw Error(ErrorCode::InvalidArgument,
                "working precision must lie in [4, " + std::to_string(numeric::kMaxDigits) + "] digits");
  if (options.tol < power_of_ten(-options.digits))
    throw Error(ErrorCode::PrecisionTooLow,
                "inputs carry " + std::to_string(options.digits) +
                    " digits, fewer than the tolerance demands");
}

void normalize_sign(RelationCandidate& c) {
  for (const auto& v : c.coefficients) {
    if (sgn(v) == 0) continue;
    if (sgn(v) < 0) {
      for (auto& w : c.coefficients) w = -w;
      for (auto& w : c.auxiliary) w = -w;
    }
    return;
  }
}

}  // namespace

int scale_exponent(const RelationOptions& options) {
  return options.digits - std::max(2, options.digits / 8);
}

std::vector<RelationCandidate> find_relations(const std::vector<std::vector<BigComplex>>& values,
                                              std::size_t bounded, const RelationOptions& options) {
  check_precision(options);
  const std::size_t nv = values.size();
  if (nv == 0 || bounded == 0) return {};
  const std::size_t ne = values[0].size();
  for (const auto& v : values)
    if (v.size() != ne) throw Error(ErrorCode::InvalidArgument, "inconsistent relation data");

  const Real scale = power_of_ten(scale_exponent(options));
  std::vector<IntRow> rows(nv, IntRow(nv + 2 * ne, 0));
  for (std::size_t v = 0; v < nv; ++v) {
    rows[v][v] = 1;
    for (std::size_t e = 0; e < ne; ++e) {
      rows[v][nv + 2 * e] = numeric::round_to_integer(scale * values[v][e].re);
      rows[v][nv + 2 * e + 1] = numeric::round_to_integer(scale * values[v][e].im);
    }
  }
  LllResult reduced = lll_reduce(rows);

  std::vector<RelationCandidate> out;
  for (const auto& row : reduced.rows) {
    RelationCandidate c;
    c.coefficients.assign(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(bounded));
    c.auxiliary.assign(row.begin() + static_cast<std::ptrdiff_t>(bounded),
                       row.begin() + static_cast<std::ptrdiff_t>(nv));
    bool nonzero = false, in_bound = true;
    for (const auto& m : c.coefficients) {
      if (sgn(m) != 0) nonzero = true;
      if (abs(m) > options.bound) in_bound = false;
    }
    if (!nonzero || !in_bound) continue;
    Real residual = 0;
    for (std::size_t e = 0; e < ne; ++e) {
      BigComplex s;
      for (std::size_t v = 0; v < nv; ++v) {
        if (sgn(row[v]) == 0) continue;
        s += BigComplex(numeric::to_real(Rat(row[v]))) * values[v][e];
      }
      residual = std::max(residual, numeric::abs(s));
    }
    if (residual >= options.tol) continue;
    c.residual = residual;
    c.verified = true;
    normalize_sign(c);
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<RelationCandidate> integer_relation(std::span<const BigComplex> xs,
                                                  const RelationOptions& options) {
  std::vector<std::vector<BigComplex>> values;
  for (const auto& x : xs) values.push_back({x});
  auto found = find_relations(values, xs.size(), options);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::optional<RelationCandidate> multiplicative_relation(std::span<const BigComplex> ys,
                                                         const RelationOptions& options) {
  std::vector<std::vector<BigComplex>> values;
  for (const auto& y : ys) {
    if (numeric::abs(y) == 0) throw Error(ErrorCode::InvalidArgument, "multiplicative input is zero");
    values.push_back({numeric::log(y)});
  }
  values.push_back({BigComplex(Real(0), numeric::two_pi())});
  for (auto& c : find_relations(values, ys.size(), options)) {
    BigComplex prod(Real(1));
    for (std::size_t i = 0; i < ys.size(); ++i)
      if (sgn(c.coefficients[i]) != 0) prod *= numeric::pow(ys[i], c.coefficients[i].get_si());
    Real residual = numeric::abs(prod - BigComplex(Real(1)));
    if (residual >= options.tol) continue;
    c.residual = residual;
    c.constant = BigComplex(Real(1));
    return c;
  }
  return std::nullopt;
}

QlinDimEstimate qlin_dim(std::span<const BigComplex> xs, std::span<const BigComplex> basis,
                         const RelationOptions& options) {
  std::vector<std::vector<BigComplex>> values;
  for (const auto& x : xs) values.push_back({x});
  for (const auto& c : basis) values.push_back({c});
  QlinDimEstimate est;
  std::vector<algebra::RatRow> kept;
  for (const auto& c : find_relations(values, xs.size(), options)) {
    algebra::RatRow row;
    for (const auto& m : c.coefficients) row.push_back(Rat(m));
    auto trial = kept;
    trial.push_back(row);
    if (algebra::rational_rank(trial) == trial.size()) {
      kept = std::move(trial);
      est.relations.push_back(c.coefficients);
    }
  }
  est.estimate = static_cast<int>(xs.size() - kept.size());
  return est;
}

Rat best_rational_approximation(const Real& x, long qmax) {
  if (qmax < 1) throw Error(ErrorCode::InvalidArgument, "denominator bound must be at least 1");
  const Real eps = power_of_ten(-(numeric::kMaxDigits - 5));
  Integer a = numeric::round_to_integer(boost::multiprecision::floor(x));
  Integer p0 = 1, q0 = 0, p1 = a, q1 = 1;
  Real frac = x - numeric::to_real(Rat(a));
  while (boost::multiprecision::abs(frac) > eps) {
    Real y = 1 / frac;
    a = numeric::round_to_integer(boost::multiprecision::floor(y));
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > qmax) {
      Integer t = (Integer(qmax) - q0) / q1;
      Rat best(p1, q1);
      if (sgn(t) > 0) {
        Rat semi(t * p1 + p0, t * q1 + q0);
        semi.canonicalize();
        Real e_best = boost::multiprecision::abs(x - numeric::to_real(best));
        Real e_semi = boost::multiprecision::abs(x - numeric::to_real(semi));
        if (e_semi < e_best) best = semi;
      }
      best.canonicalize();
      return best;
    }
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    frac = y - numeric::to_real(Rat(a));
  }
  Rat r(p1, q1);
  r.canonicalize();
  return r;
}

std::optional<std::pair<Rat, Rat>> decompose_over_basis(const BigComplex& z, long qmax,
                                                         const Real& tol) {
  Rat a = best_rational_approximation(z.re, qmax);
  Rat b = best_rational_approximation(z.im / numeric::two_pi(), qmax);
  BigComplex approx(numeric::to_real(a), numeric::to_real(b) * numeric::two_pi());
  if (numeric::abs(z - approx) >= tol) return std::nullopt;
  return std::make_pair(a, b);
}

}  // namespace gwb::relations
