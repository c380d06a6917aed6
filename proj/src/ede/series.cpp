#include "gwb/ede/series.hpp"

#include <algorithm>
#include <functional>

#include "gwb/error.hpp"

namespace gwb::ede {

using algebra::Integer;
using algebra::Monomial;
using algebra::Rat;
using algebra::RatRow;

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<GaussRat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "a series needs at least one coefficient");
}

Series Series::constant(std::size_t order, const GaussRat& c) {
  Series s(order);
  s[0] = c;
  return s;
}

Series Series::t(std::size_t order) {
  Series s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

namespace {

void same_order(const Series& a, const Series& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "series orders differ");
}

}  // namespace

Series& Series::operator+=(const Series& o) {
  same_order(*this, o);
  for (std::size_t k = 0; k < size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  same_order(*this, o);
  for (std::size_t k = 0; k < size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Series& Series::operator*=(const GaussRat& c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  same_order(a, b);
  Series out(a.order());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

Series Series::truncate(std::size_t k) const {
  if (k + 1 > size()) throw Error(ErrorCode::LengthMismatch, "series is shorter than the requested order");
  return Series(std::vector<GaussRat>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(k + 1)));
}

Series d(const Series& s) {
  Series out(s.order());
  for (std::size_t k = 0; k + 1 < s.size(); ++k) out[k] = s[k + 1] * GaussRat(static_cast<long>(k + 1));
  return out;
}

Series exp_series(const Series& x) {
  if (!x[0].is_zero()) throw Error(ErrorCode::NonzeroConstantTerm, "exp_series needs x(0) = 0");
  Series c(x.order());
  c[0] = 1;
  for (std::size_t k = 1; k < x.size(); ++k) {
    GaussRat acc;
    for (std::size_t j = 1; j <= k; ++j)
      if (!x[j].is_zero()) acc += GaussRat(static_cast<long>(j)) * x[j] * c[k - j];
    c[k] = acc / GaussRat(static_cast<long>(k));
  }
  return c;
}

bool in_gamma_de(const DiffPoint& p, std::size_t n) {
  if (p.x.size() < n + 1 || p.y.size() < n + 1)
    throw Error(ErrorCode::LengthMismatch, "series shorter than order " + std::to_string(n));
  Series x = p.x.truncate(n), y = p.y.truncate(n);
  if (y[0].is_zero()) return false;
  Series lhs = d(y), rhs = y * d(x);
  for (std::size_t k = 0; k < n; ++k)
    if (lhs[k] != rhs[k]) return false;
  return true;
}

DiffPoint make_gamma_point(const Series& x, const GaussRat& c) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroConstant, "the constant must be nonzero");
  return {x, exp_series(x) * c};
}

std::string to_string(EdeStatus s) {
  switch (s) {
    case EdeStatus::NoRelationAtBound: return "NoRelationAtBound";
    case EdeStatus::RelationFound: return "RelationFound";
    case EdeStatus::SubgroupFound: return "SubgroupFound";
  }
  return "?";
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::size_t degree_bound) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
    if (var == nvars) {
      out.emplace_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[var] = k;
      rec(var + 1, left - k);
    }
    e[var] = 0;
  };
  rec(0, static_cast<int>(degree_bound));
  auto order = algebra::MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return out;
}

std::vector<std::string> coordinate_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

std::size_t resolution_floor(std::size_t n, std::size_t degree_bound) { return 3 * (degree_bound + 1) * n; }

namespace {

/// Basis of the right kernel of a dense matrix over Q(i), one vector per free
/// column with a 1 there.
std::vector<std::vector<GaussRat>> kernel(std::vector<std::vector<GaussRat>> m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    GaussRat inv = m[row][c].inverse();
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      GaussRat f = m[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!m[row][k].is_zero()) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<std::vector<GaussRat>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    std::vector<GaussRat> v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

EdeVerdict empirical_ax_schanuel(const std::vector<DiffPoint>& points, std::size_t degree_bound,
                                 std::size_t order) {
  const std::size_t n = points.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "no points");
  if (const std::size_t floor = resolution_floor(n, degree_bound); order < floor)
    throw Error(ErrorCode::ResolutionTooLow,
                "order " + std::to_string(order) + " below the floor " + std::to_string(floor));
  for (const auto& p : points)
    if (!in_gamma_de(p, order)) throw Error(ErrorCode::InvalidArgument, "point is not in Gamma_DE");

  EdeVerdict v;
  v.degree_bound = degree_bound;
  v.checked_order = order;

  // Linear relations among the x-parts modulo constants.
  std::vector<RatRow> rows;
  for (std::size_t k = 1; k <= order; ++k) {
    RatRow re(n), im(n);
    for (std::size_t i = 0; i < n; ++i) {
      re[i] = points[i].x[k].re();
      im[i] = points[i].x[k].im();
    }
    rows.push_back(std::move(re));
    rows.push_back(std::move(im));
  }
  auto ker = algebra::rational_kernel(rows, n);
  if (!ker.empty()) {
    std::vector<std::vector<Integer>> ints;
    for (const auto& r : algebra::rref(ker)) ints.push_back(algebra::primitive_integer_row(r));
    v.subgroup = algebra::hermite_normal_form(IntMat::from_rows(ints, n));
    v.status = EdeStatus::SubgroupFound;
    return v;
  }

  // Polynomial relations with constant coefficients. With fewer coefficient
  // equations than monomials the kernel is never trivial.
  const std::size_t nv = 2 * n;
  auto monos = monomials_up_to(nv, degree_bound);
  v.monomials = monos.size();
  if (order < monos.size())
    throw Error(ErrorCode::ResolutionTooLow, std::to_string(monos.size()) + " monomials need order at least " +
                                                 std::to_string(monos.size()));
  std::vector<std::vector<Series>> powers(nv);
  for (std::size_t var = 0; var < nv; ++var) {
    Series s = var < n ? points[var].x.truncate(order) : points[var - n].y.truncate(order);
    powers[var].push_back(Series::constant(order, 1));
    for (std::size_t e = 1; e <= degree_bound; ++e) powers[var].push_back(powers[var].back() * s);
  }
  std::vector<std::vector<GaussRat>> m(order + 1, std::vector<GaussRat>(monos.size()));
  for (std::size_t c = 0; c < monos.size(); ++c) {
    Series val = Series::constant(order, 1);
    for (std::size_t var = 0; var < nv; ++var)
      if (monos[c][var] > 0) val = val * powers[var][static_cast<std::size_t>(monos[c][var])];
    for (std::size_t k = 0; k <= order; ++k) m[k][c] = val[k];
  }
  for (const auto& kv : kernel(std::move(m), monos.size())) {
    std::vector<algebra::Term> terms;
    for (std::size_t c = 0; c < monos.size(); ++c)
      if (!kv[c].is_zero()) terms.push_back({monos[c], kv[c]});
    v.relations.push_back(Polynomial::from_terms(nv, std::move(terms)).monic());
  }
  if (!v.relations.empty()) v.status = EdeStatus::RelationFound;
  return v;
}

}  // namespace gwb::ede
