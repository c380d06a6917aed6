#include <doctest.h>

#include <random>

#include "gwb/error.hpp"
#include "gwb/relations/relations.hpp"

using namespace gwb::relations;
using gwb::numeric::BigComplex;
using gwb::numeric::Real;

namespace {

IntRow row(std::initializer_list<long> v) {
  IntRow r;
  for (long x : v) r.emplace_back(x);
  return r;
}

// Shortest nonzero vector by exhaustive search over small coefficient boxes.
Integer brute_shortest_norm2(const std::vector<IntRow>& basis, long box) {
  const std::size_t n = basis.size();
  std::vector<long> c(n, -box);
  Integer best = -1;
  while (true) {
    bool zero = std::all_of(c.begin(), c.end(), [](long v) { return v == 0; });
    if (!zero) {
      IntRow v(basis[0].size(), 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += c[i] * basis[i][j];
      Integer nn = dot(v, v);
      if (best < 0 || nn < best) best = nn;
    }
    std::size_t k = 0;
    while (k < n && c[k] == box) c[k++] = -box;
    if (k == n) break;
    ++c[k];
  }
  return best;
}

Rat determinant(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Rat gram_det(const std::vector<IntRow>& b) {
  std::vector<std::vector<Rat>> g(b.size(), std::vector<Rat>(b.size()));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) g[i][j] = Rat(dot(b[i], b[j]));
  return determinant(g);
}

RelationOptions opts(long bound, const char* tol, int digits) {
  RelationOptions o;
  o.bound = bound;
  o.tol = Real(tol);
  o.digits = digits;
  return o;
}

std::vector<long> to_long(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST_CASE("LLL on the identity is the identity") {
  std::vector<IntRow> id{row({1, 0, 0}), row({0, 1, 0}), row({0, 0, 1})};
  auto r = lll_reduce(id);
  CHECK(r.rows == id);
}

TEST_CASE("LLL {(1,0),(4,1)} gives {(0,1),(1,0)} up to sign") {
  auto r = lll_reduce({row({1, 0}), row({4, 1})});
  REQUIRE(r.rows.size() == 2);
  // Both reduced vectors are unit vectors; the exhaustive oracle confirms 1 is minimal.
  CHECK(dot(r.rows[0], r.rows[0]) == 1);
  CHECK(dot(r.rows[1], r.rows[1]) == 1);
  CHECK(dot(r.rows[0], r.rows[1]) == 0);
  CHECK(brute_shortest_norm2({row({1, 0}), row({4, 1})}, 10) == 1);
}

TEST_CASE("LLL {(201,37),(1648,297)} first vector within sqrt(2) of the shortest") {
  std::vector<IntRow> b{row({201, 37}), row({1648, 297})};
  auto r = lll_reduce(b);
  Integer shortest = brute_shortest_norm2(b, 60);
  CHECK(dot(r.rows[0], r.rows[0]) <= 2 * shortest);
  CHECK(is_lll_reduced(r.rows, Rat(99, 100)));
}

TEST_CASE("LLL preserves the lattice on random bases") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> e(-50, 50);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 4;
    std::vector<IntRow> b(n, IntRow(n + 1));
    for (auto& r : b)
      for (auto& v : r) v = e(rng);
    LllResult r;
    try {
      r = lll_reduce(b, Rat(3, 4));
    } catch (const gwb::Error& err) {
      CHECK(err.code() == gwb::ErrorCode::DependentRows);
      continue;
    }
    CHECK(is_lll_reduced(r.rows, Rat(3, 4)));
    // rows = U * b with det U = +-1.
    std::vector<std::vector<Rat>> u(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) u[i][j] = Rat(r.transform[i][j]);
      IntRow combo(b[0].size(), 0);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t c = 0; c < combo.size(); ++c) combo[c] += r.transform[i][j] * b[j][c];
      CHECK(combo == r.rows[i]);
    }
    CHECK(abs(determinant(u)) == 1);
    CHECK(gram_det(r.rows) == gram_det(b));
    if (n <= 3) CHECK(dot(r.rows[0], r.rows[0]) <= Integer(1 << (n - 1)) * brute_shortest_norm2(b, 6));
  }
}

TEST_CASE("LLL rejects dependent rows") {
  CHECK_THROWS_AS(lll_reduce({row({1, 2}), row({2, 4})}), gwb::Error);
}

TEST_CASE("integer_relation examples") {
  using boost::multiprecision::log;
  SUBCASE("(ln 2, ln 3, ln 6) gives (1, 1, -1)") {
    std::vector<BigComplex> xs{log(Real(2)), log(Real(3)), log(Real(6))};
    auto r = integer_relation(xs, opts(20, "1e-10", 50));
    REQUIRE(r);
    CHECK(to_long(r->coefficients) == std::vector<long>{1, 1, -1});
    CHECK(r->residual < Real("1e-10"));
  }
  SUBCASE("(pi, pi) gives (1, -1)") {
    std::vector<BigComplex> xs{gwb::numeric::pi(), gwb::numeric::pi()};
    auto r = integer_relation(xs, opts(20, "1e-10", 50));
    REQUIRE(r);
    CHECK(to_long(r->coefficients) == std::vector<long>{1, -1});
  }
  SUBCASE("(1, sqrt 2) has no relation at bound 50") {
    Real s2 = boost::multiprecision::sqrt(Real(2));
    // Continued-fraction oracle: no q <= 50 brings q*sqrt2 within 1e-12 of an integer.
    Real best = 1;
    for (long q = 1; q <= 50; ++q) {
      Real d = boost::multiprecision::abs(q * s2 - boost::multiprecision::round(q * s2));
      if (d < best) best = d;
    }
    REQUIRE(best > Real("1e-12"));
    std::vector<BigComplex> xs{Real(1), s2};
    CHECK_FALSE(integer_relation(xs, opts(50, "1e-12", 50)));
  }
}

TEST_CASE("integer_relation rejects tolerances finer than the input precision") {
  std::vector<BigComplex> xs{Real(1), Real(2)};
  try {
    integer_relation(xs, opts(10, "1e-30", 20));
    FAIL("expected PrecisionTooLow");
  } catch (const gwb::Error& e) {
    CHECK(e.code() == gwb::ErrorCode::PrecisionTooLow);
  }
}

TEST_CASE("planted relations with |m_i| <= B/2 are recovered and re-verify") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coef(-10, 10);
  std::uniform_int_distribution<int> digit(0, 9);
  const long B = 20;
  int found = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 3 + trial % 3;
    std::vector<BigComplex> xs;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Real re = Real(digit(rng)) + gwb::numeric::pi() / (trial + i + 2);
      Real im = boost::multiprecision::sqrt(Real(static_cast<long>(trial + 3 * i + 2)));
      xs.push_back({re, im});
    }
    std::vector<long> m(n);
    for (auto& v : m) v = coef(rng);
    m[n - 1] = 1;
    BigComplex last;
    for (std::size_t i = 0; i + 1 < n; ++i) last -= BigComplex(Real(m[i])) * xs[i];
    xs.push_back(last);
    // Tolerance 1e-20 demands 20 digits; the inputs carry 40.
    auto r = integer_relation(xs, opts(B, "1e-20", 40));
    if (!r) continue;
    ++found;
    BigComplex s;
    for (std::size_t i = 0; i < n; ++i) s += BigComplex(gwb::numeric::to_real(Rat(r->coefficients[i]))) * xs[i];
    CHECK(gwb::numeric::abs(s) < Real("1e-20"));
    CHECK(gwb::numeric::abs(s) == r->residual);
  }
  CHECK(found == 50);
}

TEST_CASE("multiplicative_relation examples") {
  SUBCASE("(2, 3, 6)") {
    std::vector<BigComplex> ys{Real(2), Real(3), Real(6)};
    auto r = multiplicative_relation(ys, opts(20, "1e-10", 50));
    REQUIRE(r);
    CHECK(to_long(r->coefficients) == std::vector<long>{1, 1, -1});
  }
  SUBCASE("(i) gives m = 4") {
    std::vector<BigComplex> ys{BigComplex::i()};
    auto r = multiplicative_relation(ys, opts(20, "1e-10", 50));
    REQUIRE(r);
    CHECK(to_long(r->coefficients) == std::vector<long>{4});
  }
  SUBCASE("random exponential has no relation at bound 20") {
    std::vector<BigComplex> ys{gwb::numeric::exp(BigComplex(Real("0.37"), Real("0.11")))};
    CHECK_FALSE(multiplicative_relation(ys, opts(20, "1e-10", 50)));
  }
}

TEST_CASE("qlin_dim examples") {
  BigComplex z(Real("0.7182818284590452353602874713526624977572470936999595749669676"),
               Real("0.3141592653589793238462643383279502884197169399375105820974944"));
  BigComplex w(boost::multiprecision::sqrt(Real(3)), boost::multiprecision::cbrt(Real(5)));
  auto o = opts(20, "1e-20", 50);
  SUBCASE("(z, 2z, w) gives 2") {
    std::vector<BigComplex> xs{z, BigComplex(Real(2)) * z, w};
    auto est = qlin_dim(xs, {}, o);
    CHECK(est.estimate == 2);
    REQUIRE(est.relations.size() == 1);
    CHECK(to_long(est.relations[0]) == std::vector<long>{2, -1, 0});
  }
  SUBCASE("inputs in the span of the basis give 0") {
    std::vector<BigComplex> basis{Real(1), BigComplex(Real(0), gwb::numeric::two_pi())};
    std::vector<BigComplex> xs{Real(3), BigComplex(Real(1), gwb::numeric::two_pi() * 2)};
    CHECK(qlin_dim(xs, basis, o).estimate == 0);
  }
  SUBCASE("generic inputs with an empty basis give n") {
    std::vector<BigComplex> xs{z, w, BigComplex(boost::multiprecision::log(Real(7)))};
    CHECK(qlin_dim(xs, {}, o).estimate == 3);
  }
}

TEST_CASE("best rational approximation matches exhaustive search") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    Real x(u(rng));
    long qmax = 1 + trial % 60;
    Rat got = best_rational_approximation(x, qmax);
    CHECK(got.get_den() <= qmax);
    Real got_err = boost::multiprecision::abs(x - gwb::numeric::to_real(got));
    for (long q = 1; q <= qmax; ++q) {
      Real p = boost::multiprecision::round(x * q);
      CHECK(got_err <= boost::multiprecision::abs(x - p / q));
    }
  }
}

TEST_CASE("decompose_over_basis") {
  Real tol("1e-30");
  SUBCASE("1/2") {
    auto d = decompose_over_basis(BigComplex(Real(1) / 2), 10, tol);
    REQUIRE(d);
    CHECK(d->first == Rat(1, 2));
    CHECK(d->second == 0);
  }
  SUBCASE("2 pi i 3/4") {
    auto d = decompose_over_basis(BigComplex(Real(0), gwb::numeric::two_pi() * 3 / 4), 10, tol);
    REQUIRE(d);
    CHECK(d->first == 0);
    CHECK(d->second == Rat(3, 4));
  }
  SUBCASE("0.5 + pi i") {
    auto d = decompose_over_basis(BigComplex(Real("0.5"), gwb::numeric::pi()), 10, tol);
    REQUIRE(d);
    CHECK(d->first == Rat(1, 2));
    CHECK(d->second == Rat(1, 2));
  }
  SUBCASE("e is not in the lattice at small bounds") {
    CHECK_FALSE(decompose_over_basis(BigComplex(boost::multiprecision::exp(Real(1))), 100, tol));
  }
}

TEST_CASE("decompose_over_basis round trip") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    Rat a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    BigComplex z(gwb::numeric::to_real(a), gwb::numeric::to_real(b) * gwb::numeric::two_pi());
    auto d = decompose_over_basis(z, 12, Real("1e-40"));
    REQUIRE(d);
    CHECK(d->first == a);
    CHECK(d->second == b);
  }
}
