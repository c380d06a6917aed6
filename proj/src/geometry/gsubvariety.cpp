#include "gwb/geometry/gsubvariety.hpp"

#include "gwb/error.hpp"

namespace gwb::geometry {

using algebra::Integer;
using algebra::Monomial;
using algebra::MonomialOrder;

std::vector<std::string> GSubvariety::coordinate_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

GSubvariety::GSubvariety(std::size_t n, std::vector<Polynomial> generators, bool irreducible,
                         const GroebnerOptions& options)
    : n_(n), irreducible_(irreducible) {
  if (n == 0) throw Error(ErrorCode::MalformedVariety, "n must be positive");
  for (const auto& g : generators)
    if (g.nvars() != 2 * n)
      throw Error(ErrorCode::MalformedVariety, "generator is not over the 2n coordinates");
  IdealBasis raw(coordinate_names(n), std::move(generators));
  std::vector<std::size_t> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(n + i);
  IdealBasis sat = raw.generators().empty() ? raw : algebra::saturate_units(raw, units, options);
  ideal_ = IdealBasis(coordinate_names(n), sat.generators());
  finish(options);
}

GSubvariety GSubvariety::from_saturated(std::size_t n, const IdealBasis& ideal, bool irreducible,
                                        const GroebnerOptions& options) {
  GSubvariety v;
  v.n_ = n;
  v.irreducible_ = irreducible;
  v.ideal_ = IdealBasis(coordinate_names(n), ideal.generators());
  v.finish(options);
  return v;
}

void GSubvariety::finish(const GroebnerOptions& options) {
  ideal_ = algebra::buchberger(ideal_, options);
  // The reduced basis is a canonical generating set.
  ideal_ = IdealBasis(ideal_.vars(), ideal_.groebner()).with_groebner(ideal_.groebner());
  if (algebra::is_unit_ideal(ideal_.groebner()))
    throw Error(ErrorCode::MalformedVariety, "the variety is empty (unit ideal after saturation)");
  dimension_ = algebra::dimension_from_leading_monomials(ideal_.groebner(), 2 * n_);
}

void split_exponents(const std::vector<Integer>& row, std::vector<int>& plus, std::vector<int>& minus) {
  plus.assign(row.size(), 0);
  minus.assign(row.size(), 0);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].fits_sint_p()) throw Error(ErrorCode::InvalidArgument, "matrix entry too large");
    long e = row[j].get_si();
    if (e > 0) plus[j] = static_cast<int>(e);
    if (e < 0) minus[j] = static_cast<int>(-e);
  }
}

GSubvariety act(const IntMat& m, const GSubvariety& v, const GroebnerOptions& options) {
  const std::size_t n = v.n();
  if (m.rows() != n || m.cols() != n) throw Error(ErrorCode::InvalidArgument, "matrix must be n x n");

  // Inverses are only needed for y_j carrying a negative exponent somewhere.
  std::vector<std::size_t> inv_of(n, 0);
  std::size_t ninv = 0;
  for (std::size_t j = 0; j < n; ++j) {
    bool neg = false;
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(m(i, j)) < 0) neg = true;
    if (neg) inv_of[j] = 2 * n + ninv++;
  }
  // Layout: x, y, z (inverses), u, v.
  const std::size_t u0 = 2 * n + ninv, v0 = u0 + n, total = v0 + n;
  std::vector<std::size_t> embed(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) embed[k] = k;

  std::vector<Polynomial> gens;
  for (const auto& g : v.ideal().generators()) gens.push_back(g.remap(total, embed, MonomialOrder::grevlex()));
  const Polynomial one = Polynomial::constant(total, GaussRat(1));
  for (std::size_t j = 0; j < n; ++j)
    if (inv_of[j]) gens.push_back(Polynomial::variable(total, n + j) * Polynomial::variable(total, inv_of[j]) - one);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial lin = Polynomial::variable(total, u0 + i);
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(m(i, j)) != 0) lin -= Polynomial::variable(total, j) * GaussRat(algebra::Rat(m(i, j)));
    gens.push_back(lin);
    std::vector<int> plus, minus;
    split_exponents(m.row(i), plus, minus);
    std::vector<int> exps(total, 0);
    for (std::size_t j = 0; j < n; ++j) {
      exps[n + j] += plus[j];
      if (minus[j]) exps[inv_of[j]] += minus[j];
    }
    gens.push_back(Polynomial::variable(total, v0 + i) - Polynomial::monomial(Monomial(exps), GaussRat(1)));
  }
  std::vector<std::string> names = GSubvariety::coordinate_names(n);
  for (std::size_t k = 0; k < ninv; ++k) names.push_back("__z" + std::to_string(k));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("__u" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("__v" + std::to_string(i));
  std::vector<std::size_t> keep;
  for (std::size_t k = u0; k < total; ++k) keep.push_back(k);
  IdealBasis image = algebra::eliminate(IdealBasis(names, gens), keep, options);
  // v is a monomial in nonzerodivisors modulo I, so the elimination ideal is
  // already saturated at v.
  return GSubvariety::from_saturated(n, image, v.irreducible(), options);
}

int dim_image(const IntMat& m, const GSubvariety& v, const GroebnerOptions& options) {
  return act(m, v, options).dimension();
}

}  // namespace gwb::geometry
