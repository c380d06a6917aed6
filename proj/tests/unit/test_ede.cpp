#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "gwb/algebra/parse.hpp"
#include "gwb/error.hpp"
#include "gwb/ede/series.hpp"

using namespace gwb::ede;
using gwb::ErrorCode;
using gwb::algebra::Rat;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const gwb::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

Series poly_series(std::size_t order, std::vector<long> coeffs) {
  Series s(order);
  for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k) s[k] = coeffs[k];
  return s;
}

// Factorials computed directly.
Rat inverse_factorial(long k) {
  gwb::algebra::Integer f = 1;
  for (long j = 2; j <= k; ++j) f *= j;
  Rat q(1, f);
  q.canonicalize();
  return q;
}

Series random_series(std::mt19937_64& rng, std::size_t order, bool zero_constant = false) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  Series s(order);
  for (std::size_t k = zero_constant ? 1 : 0; k <= order; ++k) {
    Rat re(num(rng), den(rng)), im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    s[k] = GaussRat(re, im);
  }
  return s;
}

gwb::algebra::Polynomial poly(std::size_t n, const char* text) {
  return gwb::algebra::parse_polynomial(text, coordinate_names(n));
}

std::size_t rank_of(const std::vector<Polynomial>& ps) {
  std::vector<gwb::algebra::Monomial> cols;
  for (const auto& p : ps)
    for (const auto& t : p.terms())
      if (std::find(cols.begin(), cols.end(), t.monomial) == cols.end()) cols.push_back(t.monomial);
  std::vector<std::vector<GaussRat>> m;
  for (const auto& p : ps) {
    std::vector<GaussRat> row(cols.size());
    for (const auto& t : p.terms())
      row[static_cast<std::size_t>(std::find(cols.begin(), cols.end(), t.monomial) - cols.begin())] = t.coef;
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      GaussRat f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols.size(); ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool in_span(const std::vector<Polynomial>& basis, const Polynomial& p) {
  auto all = basis;
  all.push_back(p);
  return rank_of(all) == rank_of(basis);
}

}  // namespace

TEST_CASE("derivative examples") {
  CHECK(d(Series::constant(5, 7)) == Series(5));
  CHECK(d(Series::t(5)) == Series::constant(5, 1));
  CHECK(d(poly_series(5, {0, 2, 0, 1})) == poly_series(5, {2, 0, 3}));
}

TEST_CASE("exp_series examples") {
  CHECK(exp_series(Series(6)) == Series::constant(6, 1));
  Series e = exp_series(Series::t(10));
  for (long k = 0; k <= 10; ++k) CHECK(e[static_cast<std::size_t>(k)] == GaussRat(inverse_factorial(k)));
  // exp(t^2) = sum t^{2k}/k!.
  Series e2 = exp_series(poly_series(10, {0, 0, 1}));
  for (long k = 0; k <= 10; ++k) {
    GaussRat want = k % 2 == 0 ? GaussRat(inverse_factorial(k / 2)) : GaussRat(0);
    CHECK(e2[static_cast<std::size_t>(k)] == want);
  }
  CHECK(code_of([] { exp_series(Series::constant(3, 1)); }) == ErrorCode::NonzeroConstantTerm);
}

TEST_CASE("membership examples") {
  const std::size_t n = 12;
  CHECK(in_gamma_de({Series::t(n), exp_series(Series::t(n))}, n));
  CHECK_FALSE(in_gamma_de({Series::t(n), poly_series(n, {1, 1})}, n));
  CHECK(in_gamma_de({Series::constant(n, 3), Series::constant(n, GaussRat(Rat(2), Rat(-1)))}, n));
  CHECK_FALSE(in_gamma_de({Series::constant(n, 3), Series(n)}, n));
  CHECK(code_of([] { in_gamma_de({Series::t(3), Series::t(3)}, 5); }) == ErrorCode::LengthMismatch);
}

TEST_CASE("make_gamma_point examples") {
  const std::size_t n = 10;
  auto p = make_gamma_point(Series::t(n), 1);
  CHECK(p.y == exp_series(Series::t(n)));
  auto q = make_gamma_point(Series::t(n), 5);
  CHECK(q.y == exp_series(Series::t(n)) * GaussRat(5));
  CHECK(in_gamma_de(q, n));
  auto r = make_gamma_point(poly_series(n, {0, 0, 1}), 3);
  CHECK(r.y[0] == GaussRat(3));
  CHECK(r.y[2] == GaussRat(3));
  CHECK(r.y[4] == GaussRat(Rat(3, 2)));
  CHECK(in_gamma_de(r, n));
  CHECK(code_of([] { make_gamma_point(Series::t(4), 0); }) == ErrorCode::ZeroConstant);
  CHECK(code_of([] { make_gamma_point(Series::constant(4, 1), 1); }) == ErrorCode::NonzeroConstantTerm);
}

TEST_CASE("Leibniz rule on random series") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 8;
    Series f = random_series(rng, n), g = random_series(rng, n);
    Series lhs = d(f * g), rhs = d(f) * g + f * d(g);
    for (std::size_t k = 0; k < n; ++k) CHECK(lhs[k] == rhs[k]);
  }
}

TEST_CASE("Gamma_DE is closed under the group law") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 9;
    auto a = make_gamma_point(random_series(rng, n, true), GaussRat(Rat(trial + 1), Rat(1)));
    auto b = make_gamma_point(random_series(rng, n, true), GaussRat(Rat(2), Rat(-trial)));
    CHECK(in_gamma_de(a, n));
    CHECK(in_gamma_de({a.x + b.x, a.y * b.y}, n));
  }
}

TEST_CASE("empirical Ax-Schanuel examples") {
  auto one = empirical_ax_schanuel({make_gamma_point(Series::t(16), 1)}, 3, 16);
  CHECK(one.status == EdeStatus::NoRelationAtBound);
  CHECK(one.checked_order == 16);
  CHECK(one.monomials == 10);

  const std::size_t n = 12;
  auto sub = empirical_ax_schanuel({make_gamma_point(Series::t(n), 1), make_gamma_point(Series::t(n) * GaussRat(2), 1)}, 1, n);
  CHECK(sub.status == EdeStatus::SubgroupFound);
  CHECK(sub.subgroup == gwb::algebra::IntMat{{2, -1}});

  // x2 = x1^2 is a degree-2 relation among the coordinates.
  auto sq = empirical_ax_schanuel(
      {make_gamma_point(Series::t(24), 1), make_gamma_point(poly_series(24, {0, 0, 1}), 1)}, 2, 24);
  CHECK(sq.status == EdeStatus::RelationFound);
  REQUIRE(sq.relations.size() == 1);
  CHECK(sq.relations[0] == poly(2, "x2 - x1^2").monic());

  // x2 = x1^3 is invisible at degree 1.
  auto cube = empirical_ax_schanuel(
      {make_gamma_point(Series::t(24), 1), make_gamma_point(poly_series(24, {0, 0, 0, 1}), 1)}, 1, 24);
  CHECK(cube.status == EdeStatus::NoRelationAtBound);
  auto free = empirical_ax_schanuel(
      {make_gamma_point(Series::t(24), 1), make_gamma_point(exp_series(Series::t(24)) - Series::constant(24, 1), 1)},
      1, 24);
  CHECK(free.status == EdeStatus::RelationFound);
  CHECK(in_span(free.relations, poly(2, "x2 - y1 + 1")));

  CHECK(code_of([] { empirical_ax_schanuel({make_gamma_point(Series::t(8), 1)}, 3, 8); }) == ErrorCode::ResolutionTooLow);
  CHECK(code_of([] { empirical_ax_schanuel({{Series::t(20), Series::t(20)}}, 1, 20); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("planted relations are found") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  const std::size_t order = 30;
  for (int trial = 0; trial < 12; ++trial) {
    // x2 = P(x1, y1) - P(0, 1) for a random P of degree <= 2 with a
    // nonlinear or y-dependent part.
    auto x1 = Series::t(order);
    auto p1 = make_gamma_point(x1, 1);
    long a = coef(rng), b = coef(rng), c = coef(rng), e = coef(rng);
    if (b == 0 && c == 0 && e == 0) c = 1;
    Series value = x1 * GaussRat(a) + p1.y * GaussRat(b) + x1 * x1 * GaussRat(c) + x1 * p1.y * GaussRat(e);
    value[0] = 0;
    auto p2 = make_gamma_point(value, 1);
    auto verdict = empirical_ax_schanuel({p1, p2}, 2, order);
    REQUIRE(verdict.status == EdeStatus::RelationFound);
    auto planted = poly(2, "x2") - (poly(2, "x1") * GaussRat(a) + poly(2, "y1") * GaussRat(b) +
                                    poly(2, "x1^2") * GaussRat(c) + poly(2, "x1*y1") * GaussRat(e)) -
                   gwb::algebra::Polynomial::constant(4, GaussRat(-b));
    CHECK(in_span(verdict.relations, planted));
    for (const auto& r : verdict.relations) CHECK(r.total_degree() <= 2);
  }
}

TEST_CASE("subgroup stage runs below the monomial floor") {
  const std::size_t n = 24;
  auto x = Series::t(n);
  auto sub = empirical_ax_schanuel({make_gamma_point(x, 1), make_gamma_point(x * GaussRat(Rat(1, 3)), 2)}, 3, n);
  CHECK(sub.status == EdeStatus::SubgroupFound);
  CHECK(sub.subgroup == gwb::algebra::IntMat{{1, -3}});
  auto x2 = poly_series(n, {0, 0, 0, 0, 1});
  CHECK(code_of([&] { empirical_ax_schanuel({make_gamma_point(x, 1), make_gamma_point(x2, 1)}, 3, n); }) ==
        ErrorCode::ResolutionTooLow);
}
