#include <doctest.h>

#include <functional>
#include <random>

#include "gwb/algebra/parse.hpp"
#include "gwb/config/gamma.hpp"
#include "gwb/error.hpp"
#include "gwb/numeric/system.hpp"

using namespace gwb::config;
using gwb::ErrorCode;
using gwb::algebra::make_rat;
using gwb::numeric::BigComplex;
using gwb::numeric::Real;

namespace {

RatRow row(std::initializer_list<long> v) {
  RatRow r;
  for (long e : v) r.emplace_back(e);
  return r;
}

GammaPresentation make(std::vector<std::string> labels, std::vector<bool> constant,
                       std::vector<std::string> relations, std::vector<RatRow> gamma, long dbound = 24) {
  auto names = GammaPresentation::coordinate_names(labels);
  std::vector<Polynomial> rels;
  for (const auto& r : relations) rels.push_back(gwb::algebra::parse_polynomial(r, names));
  return GammaPresentation(labels, constant, rels, gamma, HSpec{}, dbound);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const gwb::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

// Numeric oracle for td over Q: rank of the Jacobian of the coordinates of b
// along an explicit parametrization of the relation variety.
int jacobian_td(const std::function<std::vector<std::complex<double>>(const std::vector<std::complex<double>>&)>& param,
                std::size_t nparams, std::size_t k, const std::vector<RatRow>& b) {
  using cd = std::complex<double>;
  auto coords = [&](const std::vector<cd>& t) {
    auto g = param(t);
    std::vector<cd> out;
    for (const auto& w : b) {
      cd s = 0, prod = 1;
      for (std::size_t j = 0; j < k; ++j) {
        double q = w[j].get_d();
        s += q * g[j];
        prod *= std::pow(g[k + j], q);
      }
      out.push_back(s);
      out.push_back(prod);
    }
    return out;
  };
  std::vector<cd> t0;
  for (std::size_t i = 0; i < nparams; ++i) t0.emplace_back(0.37 + 0.11 * static_cast<double>(i), 0.23 - 0.07 * static_cast<double>(i));
  auto f0 = coords(t0);
  gwb::numeric::CMat jac(static_cast<Eigen::Index>(f0.size()), static_cast<Eigen::Index>(nparams));
  const double h = 1e-6;
  for (std::size_t i = 0; i < nparams; ++i) {
    auto tp = t0, tm = t0;
    tp[i] += h;
    tm[i] -= h;
    auto fp = coords(tp), fm = coords(tm);
    for (std::size_t r = 0; r < f0.size(); ++r) jac(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(i)) = (fp[r] - fm[r]) / (2 * h);
  }
  return static_cast<int>(gwb::numeric::numerical_rank(jac, 1e-6));
}

}  // namespace

TEST_CASE("presentation validation") {
  CHECK(code_of([] { make({"g", "g"}, {false, false}, {}, {}); }) == ErrorCode::MalformedPresentation);
  CHECK(code_of([] { make({"g"}, {false}, {"g_x - 1", "g_x - 2"}, {}); }) == ErrorCode::MalformedPresentation);
  CHECK(code_of([] { make({"g"}, {false}, {"g_y"}, {}); }) == ErrorCode::MalformedPresentation);
  CHECK(code_of([] { make({"g"}, {false}, {}, {row({1, 1})}); }) == ErrorCode::MalformedPresentation);
  CHECK(code_of([] { make({"i"}, {false}, {}, {}); }) == ErrorCode::MalformedPresentation);
}

TEST_CASE("lattice helpers") {
  std::vector<RatRow> l = {row({2, 0}), row({1, 1})};
  CHECK(in_lattice(l, row({3, 1})));
  CHECK(in_lattice(l, row({0, 2})));
  CHECK_FALSE(in_lattice(l, row({1, 0})));
  CHECK_FALSE(in_lattice(l, row({0, 1})));
  auto sub = sublattice_supported_on(l, {1});
  REQUIRE(sub.size() == 1);
  CHECK(sub[0] == row({0, 2}));
  CHECK(sublattice_supported_on({row({1, 1})}, {0}).empty());
  CHECK(in_lattice({RatRow{make_rat(1, 3)}}, RatRow{make_rat(2, 3)}));
}

TEST_CASE("predimension examples") {
  SUBCASE("one generic pair") {
    auto p = make({"g"}, {false}, {}, {row({1})});
    auto r = predimension(p, {}, {row({1})});
    CHECK(r.td == 2);
    CHECK(r.ldim == 1);
    CHECK(r.delta == 1);
  }
  SUBCASE("pair with y = x") {
    auto p = make({"g"}, {false}, {"g_y - g_x"}, {row({1})});
    auto r = predimension(p, {}, {row({1})});
    CHECK(r.td == 1);
    CHECK(r.ldim == 1);
    CHECK(r.delta == 0);
  }
  SUBCASE("b already in Gamma(A)") {
    auto p = make({"g", "h"}, {false, false}, {}, {row({1, 0}), row({0, 1})});
    auto r = predimension(p, {0}, {row({1, 0})});
    CHECK(r.td == 0);
    CHECK(r.ldim == 0);
    CHECK(r.delta == 0);
  }
  SUBCASE("constants belong to every base") {
    auto p = make({"c", "g"}, {true, false}, {"g_x - c_x"}, {row({0, 1})});
    auto r = predimension(p, {}, {row({0, 1})});
    CHECK(r.td == 1);
    CHECK(r.delta == 0);
  }
  SUBCASE("purity and declaration errors") {
    auto p = make({"g", "h"}, {false, false}, {}, {row({2, 0})});
    CHECK(code_of([&] { predimension(p, {}, {row({1, 0})}); }) == ErrorCode::NotPure);
    CHECK(code_of([&] { predimension(p, {}, {row({0, 1})}); }) == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("purity violations") {
  CHECK(purity_violations(make({"g"}, {false}, {}, {row({2})})) == std::vector<std::size_t>{0});
  CHECK(purity_violations(make({"g"}, {false}, {}, {RatRow{make_rat(1, 2)}})).empty());
  CHECK(purity_violations(make({"g"}, {false}, {}, {row({25})}, 24)).empty());
  CHECK(purity_violations(make({"g", "h"}, {false, false}, {}, {row({1, 1}), row({1, -1})})) ==
        std::vector<std::size_t>{0, 1});
}

TEST_CASE("transcendence degree matches the Jacobian oracle") {
  using cd = std::complex<double>;
  struct Case {
    std::vector<std::string> rels;
    std::size_t nparams;
    std::function<std::vector<cd>(const std::vector<cd>&)> param;
  };
  // Two generators (g, h); coordinates g_x, h_x, g_y, h_y.
  std::vector<Case> cases = {
      {{}, 4, [](const std::vector<cd>& t) { return std::vector<cd>{t[0], t[1], std::exp(t[2]), std::exp(t[3])}; }},
      {{"g_y - g_x"}, 3, [](const std::vector<cd>& t) { return std::vector<cd>{t[0], t[1], t[0], std::exp(t[2])}; }},
      {{"h_x - 2*g_x", "h_y - g_y^2"}, 2,
       [](const std::vector<cd>& t) { return std::vector<cd>{t[0], 2.0 * t[0], std::exp(t[1]), std::exp(2.0 * t[1])}; }},
      {{"g_x - 1/2", "h_y*g_y - 3"}, 2,
       [](const std::vector<cd>& t) { return std::vector<cd>{0.5, t[0], std::exp(t[1]), 3.0 / std::exp(t[1])}; }},
      {{"g_x + h_x", "g_y - h_x"}, 2,
       [](const std::vector<cd>& t) { return std::vector<cd>{-t[0], t[0], t[0], std::exp(t[1])}; }},
  };
  std::vector<std::vector<RatRow>> tuples = {
      {row({1, 0})}, {row({0, 1})}, {row({1, 1})}, {row({2, -1})}, {row({1, 0}), row({0, 1})},
      {row({1, -1}), row({1, 1})}, {RatRow{make_rat(1, 2), make_rat(1, 3)}},
  };
  for (const auto& c : cases) {
    auto p = make({"g", "h"}, {false, false}, c.rels, {row({1, 0}), row({0, 1})}, 6);
    for (const auto& b : tuples) {
      CAPTURE(c.rels.size());
      CHECK(transcendence_degree(p, {}, b) == jacobian_td(c.param, c.nparams, 2, b));
    }
  }
}

TEST_CASE("ldim via Smith form matches brute-force rational kernels") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> e(-8, 8), count(1, 4), bit(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = static_cast<std::size_t>(count(rng));
    std::vector<RatRow> decls;
    for (std::size_t i = 0; i < m; ++i) decls.push_back(row({e(rng), e(rng), e(rng), e(rng)}));
    auto p = make({"a", "b", "c", "d"}, {false, false, false, false}, {}, decls);
    std::vector<std::size_t> a;
    for (std::size_t k = 0; k < 4; ++k)
      if (bit(rng)) a.push_back(k);
    std::vector<RatRow> b;
    for (int t = 0; t < 2; ++t) {
      RatRow w(4, Rat(0));
      for (std::size_t i = 0; i < m; ++i) {
        long c = e(rng) % 3;
        for (std::size_t j = 0; j < 4; ++j) w[j] += decls[i][j] * c;
      }
      b.push_back(w);
    }
    // Brute force: span(decls) cap Q^A from the rational kernel of the
    // restriction to the outside columns.
    std::vector<RatRow> outside_t;
    for (std::size_t j = 0; j < 4; ++j) {
      if (std::find(a.begin(), a.end(), j) != a.end()) continue;
      RatRow col;
      for (std::size_t i = 0; i < m; ++i) col.push_back(decls[i][j]);
      outside_t.push_back(col);
    }
    auto ker = outside_t.empty() ? std::vector<RatRow>{} : gwb::algebra::rational_kernel(outside_t, m);
    std::vector<RatRow> span_a;
    if (outside_t.empty()) span_a = decls;
    for (const auto& z : ker) {
      RatRow v(4, Rat(0));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < 4; ++j) v[j] += z[i] * decls[i][j];
      span_a.push_back(v);
    }
    auto all = span_a;
    all.insert(all.end(), b.begin(), b.end());
    int brute = static_cast<int>(gwb::algebra::rational_rank(all) - gwb::algebra::rational_rank(span_a));
    CHECK(linear_dimension(p, a, b) == brute);
  }
}

TEST_CASE("predimension is monotone under adding relations") {
  const std::vector<std::string> pool = {"g_y - g_x", "h_x - 2*g_x", "h_y - g_y^2", "g_x - 3"};
  const std::vector<std::vector<RatRow>> tuples = {
      {row({1, 0})}, {row({1, 1})}, {row({1, 0}), row({0, 1})}, {row({1, -2})}};
  for (const auto& b : tuples) {
    std::vector<std::string> rels;
    int last = 100;
    for (const auto& r : pool) {
      rels.push_back(r);
      auto p = make({"g", "h"}, {false, false}, rels, {row({1, 0}), row({0, 1})});
      int d = predimension(p, {}, b).delta;
      CHECK(d <= last);
      last = d;
    }
  }
}

TEST_CASE("is_rel_gamma_closed examples") {
  ClosedOptions o;
  o.rank_bound = 2;
  o.comb_bound = 2;
  SUBCASE("A = P") {
    auto p = make({"g", "h"}, {false, false}, {"g_y - g_x"}, {row({1, 0}), row({0, 1})});
    for (long b = 1; b <= 3; ++b) {
      o.comb_bound = b;
      auto v = is_rel_gamma_closed(p, {0, 1}, o);
      CHECK(v.status == ClosedStatus::ClosedUpTo);
      CHECK(v.tuples == 0);
    }
  }
  SUBCASE("y = x over the prime field") {
    auto p = make({"g"}, {false}, {"g_y - g_x"}, {row({1})});
    auto v = is_rel_gamma_closed(p, {}, o);
    REQUIRE(v.status == ClosedStatus::NotClosed);
    REQUIRE(v.witness.size() == 1);
    CHECK(v.witness[0] == row({1}));
    CHECK(v.witness_predim.delta == 0);
  }
  SUBCASE("single generic pair") {
    auto p = make({"g"}, {false}, {}, {row({1})});
    o.rank_bound = 1;
    for (long b = 1; b <= 4; ++b) {
      o.comb_bound = b;
      auto v = is_rel_gamma_closed(p, {}, o);
      CHECK(v.status == ClosedStatus::ClosedUpTo);
      CHECK(v.tuples == 1);
    }
  }
  SUBCASE("budget") {
    auto p = make({"a", "b", "c"}, {false, false, false}, {}, {row({1, 0, 0}), row({0, 1, 0}), row({0, 0, 1})});
    o.rank_bound = 3;
    o.comb_bound = 3;
    o.max_tuples = 10;
    CHECK(code_of([&] { is_rel_gamma_closed(p, {}, o); }) == ErrorCode::ResourceExhausted);
  }
}

TEST_CASE("closedness: serial and parallel agree, witnesses recheck") {
  const std::vector<std::vector<std::string>> rels = {
      {}, {"g_y - g_x"}, {"h_x - 2*g_x", "h_y - g_y^2"}, {"g_x + h_x", "g_y*h_y - 1"}, {"h_y - g_x"}};
  ClosedOptions o;
  o.rank_bound = 2;
  o.comb_bound = 1;
  for (const auto& r : rels) {
    auto p = make({"g", "h"}, {false, false}, r, {row({1, 0}), row({0, 1})});
    for (const std::vector<std::size_t>& a : {std::vector<std::size_t>{}, std::vector<std::size_t>{0}}) {
      o.parallel = false;
      auto s = is_rel_gamma_closed(p, a, o);
      o.parallel = true;
      auto q = is_rel_gamma_closed(p, a, o);
      CHECK(s.status == q.status);
      CHECK(s.witness == q.witness);
      if (s.status == ClosedStatus::NotClosed) CHECK(predimension(p, a, s.witness).delta <= 0);
    }
  }
}

TEST_CASE("blur examples") {
  SUBCASE("trivial H") {
    auto p = make({"g"}, {false}, {"g_x - 1"}, {row({1})});
    auto r = blur(p, HSpec{});
    CHECK(r.h_generators.empty());
    CHECK(r.presentation.gamma() == p.gamma());
    CHECK(r.presentation.labels() == p.labels());
  }
  SUBCASE("(1, e) blurred by the exp lattice declares (1, e^(3/2))") {
    auto p = make({"g"}, {false}, {"g_x - 1"}, {row({1})});
    HSpec h{HSpec::Kind::LatticeExp, {"1", "2*pi*i"}, ""};
    auto r = blur(p, h);
    REQUIRE(r.h_generators.size() == 1);
    const auto& q = r.presentation;
    CHECK(q.constant()[r.h_generators[0]]);
    CHECK(q.blur() == h);
    // (1, e^(3/2)) = (1, e) + (1/2)(0, e).
    CHECK(is_declared(q, RatRow{Rat(1), make_rat(1, 2)}));
    CHECK(is_declared(q, RatRow{Rat(0), make_rat(1, 24)}));
    CHECK_FALSE(is_declared(p, RatRow{make_rat(1, 2)}));
    CHECK(purity_violations(q).empty());
  }
  SUBCASE("full Gm declares every generator pair") {
    auto p = make({"g", "h"}, {false, false}, {}, {});
    auto q = blur(p, HSpec{HSpec::Kind::ConstantsField, {}, "gm(F)"}).presentation;
    CHECK(is_declared(q, row({1, 0})));
    CHECK(is_declared(q, row({0, 1})));
    CHECK(is_declared(q, RatRow{make_rat(1, 5), make_rat(-7, 3)}));
  }
  SUBCASE("constants field adds (0, c) for each constant") {
    auto p = make({"c", "g"}, {true, false}, {}, {row({0, 1})});
    auto r = blur(p, HSpec{HSpec::Kind::ConstantsField, {}, "gm(C)"});
    REQUIRE(r.h_generators.size() == 1);
    CHECK(r.presentation.labels()[2] == "h_c");
  }
  SUBCASE("unsupported specs") {
    auto p = make({"g"}, {false}, {}, {row({1})});
    CHECK(code_of([&] { blur(p, HSpec{HSpec::Kind::LatticeExp, {"sqrt(2)"}, ""}); }) == ErrorCode::UnsupportedHSpec);
    CHECK(code_of([&] { blur(p, HSpec{HSpec::Kind::ConstantsField, {}, "gm(K)"}); }) == ErrorCode::UnsupportedHSpec);
    auto q = blur(p, HSpec{HSpec::Kind::LatticeExp, {"1"}, ""}).presentation;
    CHECK(code_of([&] { blur(q, HSpec{}); }) == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("blurred predimension equals exponential predimension of the translate") {
  struct Config {
    std::vector<std::string> labels;
    std::vector<std::string> rels;
    std::vector<RatRow> decls;
    std::vector<std::size_t> a;
    std::vector<RatRow> w;
    std::vector<Rat> shift;
  };
  std::vector<Config> configs = {
      {{"g"}, {}, {row({1})}, {}, {row({1})}, {make_rat(1, 2)}},
      {{"g"}, {"g_y - g_x"}, {row({1})}, {}, {row({1})}, {make_rat(3, 4)}},
      {{"g"}, {"g_x - 1"}, {row({1})}, {}, {row({1})}, {make_rat(-1, 3)}},
      {{"g", "h"}, {}, {row({1, 0}), row({0, 1})}, {0}, {row({0, 1})}, {make_rat(5, 6)}},
      {{"g", "h"}, {"h_x - 2*g_x", "h_y - g_y^2"}, {row({1, 0}), row({0, 1})}, {}, {row({1, 0}), row({0, 1})},
       {make_rat(1, 2), make_rat(1, 3)}},
      {{"g", "h"}, {"g_y - h_x"}, {row({1, 0}), row({0, 1})}, {}, {row({1, 1})}, {make_rat(7, 8)}},
      {{"g", "h"}, {"g_x + h_x"}, {row({1, 0}), row({0, 1})}, {1}, {row({1, 0})}, {Rat(2)}},
      {{"g", "h"}, {"g_y*h_y - 5"}, {row({1, 1})}, {}, {row({1, 1})}, {make_rat(-5, 2)}},
      {{"a", "b", "c"}, {"c_x - a_x - b_x", "c_y - a_y*b_y"}, {row({1, 0, 0}), row({0, 1, 0}), row({0, 0, 1})}, {},
       {row({1, 0, 0}), row({0, 1, 0}), row({0, 0, 1})}, {make_rat(1, 2), Rat(0), make_rat(1, 6)}},
      {{"a", "b"}, {"a_y - b_y"}, {row({1, 0}), row({0, 1})}, {0}, {row({1, -1})}, {make_rat(2, 3)}},
  };
  HSpec h{HSpec::Kind::LatticeExp, {"1", "2*pi*i"}, ""};
  for (const auto& c : configs) {
    std::vector<bool> constant(c.labels.size(), false);
    auto p = make(c.labels, constant, c.rels, c.decls);
    auto r = blur(p, h);
    const auto& q = r.presentation;
    const std::size_t hidx = r.h_generators.at(0);
    std::vector<RatRow> b;
    for (std::size_t j = 0; j < c.w.size(); ++j) {
      RatRow v = c.w[j];
      v.resize(q.size(), Rat(0));
      v[hidx] = c.shift[j];
      b.push_back(v);
    }
    auto before = predimension(p, c.a, c.w);
    auto after = predimension(q, c.a, b);
    CHECK(after.delta == before.delta);
    CHECK(after.td == before.td);
    CHECK(after.ldim == before.ldim);
  }
}

namespace {

BigComplex cnum(double re, double im) { return BigComplex(Real(re), Real(im)); }

}  // namespace

TEST_CASE("ax_schanuel_witness examples") {
  const std::vector<BigComplex> basis = {BigComplex(Real(1)), BigComplex(Real(0), gwb::numeric::two_pi())};
  AxsOptions o;
  o.bound = 10;
  SUBCASE("(z, e^z), (2z, e^2z)") {
    BigComplex z(Real("0.7"), Real("0.3"));
    BigComplex z2 = z + z;
    auto w = ax_schanuel_witness({z, z2}, {gwb::numeric::exp(z), gwb::numeric::exp(z2)}, basis, o);
    REQUIRE(w);
    CHECK(w->m == IntMat{{2, -1}});
    CHECK_FALSE(w->trivial_j);
    CHECK(w->residual < o.tol * 10);
  }
  SUBCASE("points of G(C) give J = {1}") {
    std::vector<BigComplex> x = {BigComplex(Real("0.5")), BigComplex(Real(3)) + basis[1] * BigComplex(Real("0.25"))};
    std::vector<BigComplex> y = {gwb::numeric::exp(x[0]), gwb::numeric::exp(x[1])};
    auto w = ax_schanuel_witness(x, y, basis, o);
    REQUIRE(w);
    CHECK(w->trivial_j);
    CHECK(w->m == IntMat::identity(2));
    CHECK(w->x_constants[0] == std::vector<Rat>{make_rat(1, 2), Rat(0)});
  }
  SUBCASE("a random transcendental has no relation") {
    BigComplex x(Real("0.86525597943226508721"), Real(0));
    auto w = ax_schanuel_witness({x}, {gwb::numeric::exp(x)}, {BigComplex(Real(1))}, o);
    CHECK_FALSE(w);
  }
  SUBCASE("tolerance below the working precision") {
    o.tol = Real("1e-60");
    CHECK(code_of([&] { ax_schanuel_witness({cnum(1, 0)}, {cnum(1, 0)}, basis, o); }) ==
          ErrorCode::ToleranceUnachievable);
  }
}

TEST_CASE("ax_schanuel_witness output re-verifies") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_int_distribution<long> small(-3, 3);
  const std::vector<BigComplex> basis = {BigComplex(Real(1)), BigComplex(Real(0), gwb::numeric::two_pi())};
  AxsOptions o;
  int found = 0;
  for (int trial = 0; trial < 15; ++trial) {
    BigComplex z1(Real(u(rng)), Real(u(rng))), z2(Real(u(rng)), Real(u(rng)));
    long a = small(rng), b = small(rng);
    if (a == 0 && b == 0) a = 1;
    BigComplex z3 = BigComplex(Real(a)) * z1 + BigComplex(Real(b)) * z2 + BigComplex(Real(trial % 3) / 2);
    std::vector<BigComplex> x = {z1, z2, z3};
    std::vector<BigComplex> y;
    for (const auto& v : x) y.push_back(gwb::numeric::exp(v));
    auto w = ax_schanuel_witness(x, y, basis, o);
    REQUIRE(w);
    ++found;
    CHECK(w->m.rank() >= 1);
    for (std::size_t i = 0; i < w->m.rows(); ++i)
      CHECK(axs_row_defect(x, y, basis, w->m.row(i), w->x_constants[i], w->y_constants[i]) < o.tol * 10);
  }
  CHECK(found == 15);
}

TEST_CASE("locus_strong_rotund examples") {
  using gwb::geometry::GSubvariety;
  using gwb::geometry::RotundStatus;
  auto names1 = GSubvariety::coordinate_names(1);
  GSubvariety diag(1, {gwb::algebra::parse_polynomial("y1 - x1", names1)}, true);
  GSubvariety g1(1, {}, true);
  gwb::geometry::RotundityOptions o;
  o.bound = 2;
  SUBCASE("generic a with V = G^1") {
    auto p = make({"g"}, {false}, {}, {row({1})});
    auto r = locus_strong_rotund(p, {row({1})}, g1, o);
    CHECK(r.status == RotundStatus::StronglyRotundUpTo);
  }
  SUBCASE("a with y = x and V = {y1 = x1}") {
    auto p = make({"g"}, {false}, {"g_y - g_x"}, {row({1})});
    auto r = locus_strong_rotund(p, {row({1})}, diag, o);
    CHECK(r.status == RotundStatus::NotStronglyRotund);
    REQUIRE(r.witness);
    CHECK(*r.witness == IntMat::identity(2));
  }
  SUBCASE("empty a reduces to V") {
    auto p = make({"g"}, {false}, {}, {row({1})});
    auto r = locus_strong_rotund(p, {}, diag, o);
    CHECK(r.status == RotundStatus::NotStronglyRotund);
    CHECK(*r.witness == IntMat{{1}});
  }
  SUBCASE("dependent tuple is rejected") {
    auto p = make({"g"}, {false}, {}, {row({1})});
    CHECK(code_of([&] { locus_strong_rotund(p, {row({1}), row({2})}, g1, o); }) == ErrorCode::InvalidArgument);
  }
  SUBCASE("locus of a pair with y = x") {
    auto p = make({"g"}, {false}, {"g_y - g_x"}, {row({1})});
    auto loc = locus(p, {row({2})});
    // (2t, t^2): v = u^2/4.
    CHECK(loc.groebner().size() == 1);
    CHECK(loc.groebner()[0] == gwb::algebra::parse_polynomial("x1^2 - 4*y1", names1));
  }
}
