#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwb/algebra/polynomial.hpp"

namespace gwb::algebra {

struct GroebnerOptions {
  /// Maximum number of reduction steps before ResourceExhausted is raised.
  std::size_t step_budget = 1'000'000;
};

/// Generators of an ideal in a named variable context, optionally carrying its
/// reduced Groebner basis for `order`.
class IdealBasis {
 public:
  IdealBasis() = default;
  IdealBasis(std::vector<std::string> vars, std::vector<Polynomial> generators,
             MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const MonomialOrder& order() const { return order_; }

  bool has_groebner() const { return groebner_.has_value(); }
  /// Throws InvalidArgument when no basis has been computed.
  const std::vector<Polynomial>& groebner() const;
  IdealBasis with_groebner(std::vector<Polynomial> basis) const;

  std::optional<std::size_t> index_of(const std::string& var) const;

 private:
  std::vector<std::string> vars_;
  std::vector<Polynomial> generators_;
  MonomialOrder order_ = MonomialOrder::grevlex();
  std::optional<std::vector<Polynomial>> groebner_;
};

/// Reduced Groebner basis of the ideal generated by `generators` under `order`,
/// sorted by increasing leading monomial. The zero ideal yields an empty basis
/// and the unit ideal yields {1}.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                       MonomialOrder order, const GroebnerOptions& options = {});

/// Remainder of f on division by `basis` (full reduction).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

IdealBasis buchberger(const IdealBasis& ideal, const GroebnerOptions& options = {});

bool is_unit_ideal(std::span<const Polynomial> groebner);
bool is_member(const Polynomial& f, const IdealBasis& ideal, const GroebnerOptions& options = {});
/// Equality by mutual reduction, valid across different orders.
bool same_ideal(const IdealBasis& a, const IdealBasis& b, const GroebnerOptions& options = {});

/// I ∩ k[keep], expressed over the kept variables in their original relative
/// order. Uses a block elimination order internally.
IdealBasis eliminate(const IdealBasis& ideal, std::span<const std::size_t> keep,
                     const GroebnerOptions& options = {});
IdealBasis eliminate(const IdealBasis& ideal, std::span<const std::string> keep,
                     const GroebnerOptions& options = {});

/// Krull dimension of V(I): the largest set of variables containing no leading
/// monomial support. -1 for the unit ideal.
int ideal_dimension(const IdealBasis& ideal, const GroebnerOptions& options = {});
int dimension_from_leading_monomials(std::span<const Polynomial> groebner, std::size_t nvars);

/// I : (prod of unit_vars)^inf, computed by adjoining z_i with y_i z_i - 1 and
/// eliminating the z_i.
IdealBasis saturate_units(const IdealBasis& ideal, std::span<const std::size_t> unit_vars,
                          const GroebnerOptions& options = {});

}  // namespace gwb::algebra
