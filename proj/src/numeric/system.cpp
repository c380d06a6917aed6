#include "gwb/numeric/system.hpp"

#include <algorithm>

#include <Eigen/SVD>

#include "gwb/error.hpp"

namespace gwb::numeric {

PolySystem::PolySystem(std::span<const algebra::Polynomial> polys, std::size_t nvars)
    : nvars_(nvars) {
  for (const auto& p : polys) {
    if (p.nvars() != nvars) throw Error(ErrorCode::InvalidArgument, "polynomial arity mismatch");
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      Term term{t.coef.to_complex(), t.coef, {}};
      for (std::size_t v = 0; v < nvars; ++v)
        if (t.monomial[v] > 0) term.powers.emplace_back(v, t.monomial[v]);
      terms.push_back(std::move(term));
    }
    polys_.push_back(std::move(terms));
  }
}

CVec PolySystem::evaluate(const CVec& x) const {
  CVec out(static_cast<Eigen::Index>(polys_.size()));
  for (std::size_t p = 0; p < polys_.size(); ++p) {
    cd s = 0;
    for (const auto& t : polys_[p]) {
      cd v = t.coef;
      for (auto [var, e] : t.powers) v *= std::pow(x[static_cast<Eigen::Index>(var)], e);
      s += v;
    }
    out[static_cast<Eigen::Index>(p)] = s;
  }
  return out;
}

CMat PolySystem::jacobian(const CVec& x) const {
  CMat jac = CMat::Zero(static_cast<Eigen::Index>(polys_.size()), static_cast<Eigen::Index>(nvars_));
  for (std::size_t p = 0; p < polys_.size(); ++p)
    for (const auto& t : polys_[p])
      for (std::size_t k = 0; k < t.powers.size(); ++k) {
        auto [var, e] = t.powers[k];
        cd v = t.coef * static_cast<double>(e) * std::pow(x[static_cast<Eigen::Index>(var)], e - 1);
        for (std::size_t o = 0; o < t.powers.size(); ++o)
          if (o != k) v *= std::pow(x[static_cast<Eigen::Index>(t.powers[o].first)], t.powers[o].second);
        jac(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(var)) += v;
      }
  return jac;
}

BigComplex PolySystem::eval_poly(std::size_t p, std::span<const BigComplex> x) const {
  BigComplex s;
  for (const auto& t : polys_[p]) {
    BigComplex v(t.exact);
    for (auto [var, e] : t.powers) v *= pow(x[var], e);
    s += v;
  }
  return s;
}

BigComplex PolySystem::eval_derivative(std::size_t p, std::size_t var,
                                       std::span<const BigComplex> x) const {
  BigComplex s;
  for (const auto& t : polys_[p]) {
    int e_var = 0;
    for (auto [v, e] : t.powers)
      if (v == var) e_var = e;
    if (e_var == 0) continue;
    BigComplex v(t.exact);
    v *= BigComplex(Real(e_var));
    for (auto [w, e] : t.powers) v *= pow(x[w], w == var ? e - 1 : e);
    s += v;
  }
  return s;
}

std::vector<BigComplex> PolySystem::evaluate(std::span<const BigComplex> x) const {
  std::vector<BigComplex> out;
  for (std::size_t p = 0; p < polys_.size(); ++p) out.push_back(eval_poly(p, x));
  return out;
}

std::vector<BigComplex> PolySystem::evaluate_rows(std::span<const BigComplex> x,
                                                  std::span<const std::size_t> rows) const {
  std::vector<BigComplex> out;
  for (auto p : rows) out.push_back(eval_poly(p, x));
  return out;
}

std::vector<std::vector<BigComplex>> PolySystem::jacobian(std::span<const BigComplex> x,
                                                          std::span<const std::size_t> rows) const {
  std::vector<std::vector<BigComplex>> jac;
  for (auto p : rows) {
    std::vector<BigComplex> r;
    for (std::size_t v = 0; v < nvars_; ++v) r.push_back(eval_derivative(p, v, x));
    jac.push_back(std::move(r));
  }
  return jac;
}

std::size_t numerical_rank(const CMat& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  // Relative to the largest singular value but never below rel_tol itself, so
  // a lone tiny derivative still counts as rank deficient.
  const double floor = rel_tol * std::max(s[0], 1.0);
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > floor) ++r;
  return r;
}

double condition_number(const CMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 1.0;
  Eigen::JacobiSVD<CMat> svd(m);
  const auto& s = svd.singularValues();
  double smin = s[s.size() - 1];
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s[0] / smin;
}

std::vector<BigComplex> solve_big(std::vector<std::vector<BigComplex>> a, std::vector<BigComplex> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    Real best = abs(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      Real v = abs(a[r][c]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best == 0) throw Error(ErrorCode::NewtonDiverged, "singular extended-precision Jacobian");
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < n; ++r) {
      BigComplex f = a[r][c] / a[c][c];
      if (f.re == 0 && f.im == 0) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  std::vector<BigComplex> x(n);
  for (std::size_t r = n; r-- > 0;) {
    BigComplex s = b[r];
    for (std::size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
    x[r] = s / a[r][r];
  }
  return x;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  auto splitmix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return splitmix(splitmix(splitmix(seed) ^ a) ^ (b * 0x632be59bd9b4e019ULL));
}

}  // namespace gwb::numeric
