#include "gwb/geometry/freeness.hpp"

#include <algorithm>
#include <map>

#include "gwb/error.hpp"
#include "gwb/relations/relations.hpp"

namespace gwb::geometry {

using algebra::Monomial;
using algebra::MonomialOrder;
using algebra::Rat;
using algebra::RatRow;
using numeric::BigComplex;
using numeric::Real;

std::string to_string(MultStatus s) {
  switch (s) {
    case MultStatus::FreeUpTo: return "FreeUpTo";
    case MultStatus::NotFree: return "NotFree";
    case MultStatus::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

// Ring x, y, z with z_j = 1/y_j for every j.
std::vector<Polynomial> with_inverses(const GSubvariety& v) {
  const std::size_t n = v.n(), total = 3 * n;
  std::vector<std::size_t> embed(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) embed[k] = k;
  std::vector<Polynomial> gens;
  for (const auto& g : v.ideal().generators()) gens.push_back(g.remap(total, embed, MonomialOrder::grevlex()));
  for (std::size_t j = 0; j < n; ++j)
    gens.push_back(Polynomial::variable(total, n + j) * Polynomial::variable(total, 2 * n + j) -
                   Polynomial::constant(total, GaussRat(1)));
  return gens;
}

Monomial laurent_monomial(std::size_t n, const std::vector<Integer>& m) {
  std::vector<int> plus, minus;
  split_exponents(m, plus, minus);
  std::vector<int> exps(3 * n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    exps[n + j] = plus[j];
    exps[2 * n + j] = minus[j];
  }
  return Monomial(exps);
}

}  // namespace

std::optional<GaussRat> additive_constant(const GSubvariety& v, const std::vector<Integer>& m) {
  const std::size_t n = v.n();
  Polynomial lin(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(m[i]) != 0) lin += Polynomial::variable(2 * n, i) * GaussRat(Rat(m[i]));
  Polynomial nf = algebra::normal_form(lin, v.groebner());
  if (!nf.is_constant()) return std::nullopt;
  return nf.constant_term();
}

AdditiveFreeness is_additively_free(const GSubvariety& v, const GroebnerOptions&) {
  const std::size_t n = v.n();
  std::vector<Polynomial> tails;
  std::vector<GaussRat> consts;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial nf = algebra::normal_form(Polynomial::variable(2 * n, i), v.groebner());
    GaussRat c = nf.constant_term();
    consts.push_back(c);
    tails.push_back(nf - Polynomial::constant(2 * n, c));
  }
  // sum q_i tail_i = 0 with q rational: split every coefficient into re/im.
  std::map<std::vector<int>, std::size_t> index;
  std::vector<RatRow> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : tails[i].terms()) {
      auto [it, inserted] = index.emplace(t.monomial.exponents(), rows.size());
      if (inserted) {
        rows.emplace_back(n, Rat(0));
        rows.emplace_back(n, Rat(0));
      }
      rows[it->second][i] = t.coef.re();
      rows[it->second + 1][i] = t.coef.im();
    }
  auto kernel = algebra::rational_kernel(rows, n);
  AdditiveFreeness out;
  if (kernel.empty()) return out;
  out.free = false;
  out.m = algebra::primitive_integer_row(kernel.front());
  out.c = GaussRat(0);
  for (std::size_t i = 0; i < n; ++i) out.c += consts[i] * GaussRat(Rat(out.m[i]));
  return out;
}

std::optional<GaussRat> multiplicative_constant(const GSubvariety& v, const std::vector<Integer>& m,
                                                const GroebnerOptions& options) {
  const std::size_t n = v.n();
  auto gb = algebra::groebner_basis(with_inverses(v), MonomialOrder::grevlex(), options);
  Polynomial mono = Polynomial::monomial(laurent_monomial(n, m), GaussRat(1));
  Polynomial nf = algebra::normal_form(mono, gb);
  if (!nf.is_constant() || nf.is_zero()) return std::nullopt;
  return nf.constant_term();
}

MultiplicativeFreeness is_multiplicatively_free(const GSubvariety& v,
                                                const MultiplicativeOptions& options) {
  if (options.bound < 1) throw Error(ErrorCode::InvalidArgument, "bound must be positive");
  const std::size_t n = v.n();
  numeric::PolySystem system(v.groebner(), 2 * n);
  std::vector<std::size_t> units;
  for (std::size_t j = 0; j < n; ++j) units.push_back(n + j);
  const int extra = std::max(1, options.extra_samples);

  std::vector<std::vector<BigComplex>> logs;
  for (int k = 0; k <= extra; ++k) {
    auto sample = numeric::sample_regular_point(system, static_cast<std::size_t>(v.dimension()), units,
                                                numeric::mix_seed(options.seed, 0x5a17, static_cast<std::uint64_t>(k)),
                                                options.sampling);
    if (!sample) throw Error(ErrorCode::SamplingFailed, "no smooth sample point found on V");
    auto refined = numeric::refine_extended(system, *sample);
    std::vector<BigComplex> l;
    for (std::size_t j = 0; j < n; ++j) l.push_back(numeric::log(refined.point[n + j]));
    logs.push_back(std::move(l));
  }

  // Variables: y_1..y_n (bounded), then one 2*pi*i auxiliary per equation.
  const std::size_t eqs = logs.size() - 1;
  std::vector<std::vector<BigComplex>> values(n + eqs, std::vector<BigComplex>(eqs));
  for (std::size_t e = 0; e < eqs; ++e) {
    for (std::size_t j = 0; j < n; ++j) values[j][e] = logs[e + 1][j] - logs[0][j];
    values[n + e][e] = BigComplex(Real(0), numeric::two_pi());
  }
  relations::RelationOptions ropts;
  ropts.bound = options.bound;
  ropts.digits = options.digits;
  ropts.tol = boost::multiprecision::pow(Real(10), -(options.digits / 2));
  auto candidates = relations::find_relations(values, n, ropts);

  MultiplicativeFreeness out;
  out.bound = options.bound;
  out.samples = logs.size();
  for (const auto& cand : candidates) {
    Integer peak = 0;
    for (const auto& e : cand.coefficients) peak = std::max(peak, Integer(abs(e)));
    for (long k = 1; peak * k <= options.bound; ++k) {
      std::vector<Integer> m;
      for (const auto& e : cand.coefficients) m.push_back(e * k);
      if (auto c = multiplicative_constant(v, m, options.groebner)) {
        out.status = MultStatus::NotFree;
        out.m = m;
        out.c = *c;
        return out;
      }
    }
  }
  if (!candidates.empty()) {
    out.status = MultStatus::Unknown;
    out.m = candidates.front().coefficients;
  }
  return out;
}

FibreReport fibre_dim_check(const GSubvariety& v, const IntMat& m, const std::vector<GaussRat>& gamma,
                            const GroebnerOptions& options) {
  const std::size_t n = v.n();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::InvalidArgument, "matrix must be n x n");
  if (gamma.size() != 2 * n) throw Error(ErrorCode::InvalidArgument, "point must have 2n coordinates");
  for (std::size_t j = 0; j < n; ++j)
    if (gamma[n + j].is_zero()) throw Error(ErrorCode::PointNotOnVariety, "multiplicative coordinate is zero");
  for (const auto& g : v.ideal().generators())
    if (!g.evaluate(gamma).is_zero()) throw Error(ErrorCode::PointNotOnVariety, "point does not satisfy V");

  const std::size_t total = 3 * n;
  std::vector<Polynomial> gens = with_inverses(v);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = m.row(i);
    if (std::all_of(row.begin(), row.end(), [](const Integer& e) { return sgn(e) == 0; })) continue;
    Polynomial lin(total);
    GaussRat target(0), mult(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(row[j]) == 0) continue;
      lin += Polynomial::variable(total, j) * GaussRat(Rat(row[j]));
      target += gamma[j] * GaussRat(Rat(row[j]));
      mult *= gamma[n + j].pow(row[j].get_si());
    }
    gens.push_back(lin - Polynomial::constant(total, target));
    gens.push_back(Polynomial::monomial(laurent_monomial(n, row), GaussRat(1)) -
                   Polynomial::constant(total, mult));
  }
  std::vector<std::string> names = GSubvariety::coordinate_names(n);
  for (std::size_t j = 1; j <= n; ++j) names.push_back("__z" + std::to_string(j));
  FibreReport r;
  r.fiber_dim = algebra::ideal_dimension(IdealBasis(names, gens), options);
  r.dim_j = static_cast<int>(n - m.rank());
  r.satisfies_lemma = r.fiber_dim <= r.dim_j;
  return r;
}

}  // namespace gwb::geometry
