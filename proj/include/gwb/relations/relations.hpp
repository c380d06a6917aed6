#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gwb/numeric/bigfloat.hpp"
#include "gwb/relations/lll.hpp"

namespace gwb::relations {

using numeric::BigComplex;
using numeric::Real;

struct RelationOptions {
  /// Coefficient bound |m_i| <= bound.
  long bound = 20;
  Real tol = Real("1e-20");
  /// Significant decimal digits carried by the inputs.
  int digits = 50;
};

struct RelationCandidate {
  std::vector<Integer> coefficients;
  /// Coefficients of auxiliary quantities (basis constants, 2*pi*i).
  std::vector<Integer> auxiliary;
  Real residual{0};
  bool verified = false;
  /// Multiplicative constant c in prod y^m = c; 1 for plain relations.
  BigComplex constant{Real(1)};
};

/// Scale factor 10^k applied to the real and imaginary columns.
int scale_exponent(const RelationOptions& options);

/// Shared lattice search. values[v][e] is the value of variable v in equation
/// e; variables [0, bounded) carry the bounded coefficients and the rest are
/// auxiliaries with free integer coefficients. Returns every reduced vector
/// whose bounded part is nonzero, within the bound and whose residual (max
/// over equations) is below tol, in reduced-basis order.
std::vector<RelationCandidate> find_relations(const std::vector<std::vector<BigComplex>>& values,
                                              std::size_t bounded, const RelationOptions& options);

std::optional<RelationCandidate> integer_relation(std::span<const BigComplex> xs,
                                                  const RelationOptions& options);

/// prod y_i^{m_i} = 1 via a joint relation on principal logs and 2*pi*i.
std::optional<RelationCandidate> multiplicative_relation(std::span<const BigComplex> ys,
                                                         const RelationOptions& options);

struct QlinDimEstimate {
  int estimate = 0;
  /// Independent relations found among the inputs modulo the basis span.
  std::vector<std::vector<Integer>> relations;
};

QlinDimEstimate qlin_dim(std::span<const BigComplex> xs, std::span<const BigComplex> basis,
                         const RelationOptions& options);

/// Closest rational with denominator <= qmax (continued fractions with
/// semiconvergents).
Rat best_rational_approximation(const Real& x, long qmax);

/// z = a + b*2*pi*i with a, b rationals of denominator <= qmax, within tol.
std::optional<std::pair<Rat, Rat>> decompose_over_basis(const BigComplex& z, long qmax,
                                                         const Real& tol);

}  // namespace gwb::relations
