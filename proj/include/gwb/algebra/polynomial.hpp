#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gwb/algebra/rational.hpp"

namespace gwb::algebra {

/// Dense exponent vector over a fixed variable context.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial variable(std::size_t nvars, std::size_t var, int power = 1);

  std::size_t nvars() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  /// Variables with a positive exponent.
  std::vector<std::size_t> support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Admissible monomial orders. `Block` compares the first `block` variables by
/// grevlex and breaks ties with grevlex on the remaining ones; it is an
/// elimination order for the first block.
struct MonomialOrder {
  enum class Kind { Lex, GrevLex, Block };
  Kind kind = Kind::GrevLex;
  std::size_t block = 0;

  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
  static MonomialOrder elimination(std::size_t block) { return {Kind::Block, block}; }

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::string to_string(const MonomialOrder& order);

struct Term {
  Monomial monomial;
  GaussRat coef;
};

/// Sparse polynomial over Q(i). Terms are kept sorted in decreasing order under
/// the polynomial's monomial order and never carry a zero coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex())
      : nvars_(nvars), order_(order) {}

  static Polynomial constant(std::size_t nvars, const GaussRat& c,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(std::size_t nvars, std::size_t var,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial monomial(const Monomial& m, const GaussRat& c,
                             MonomialOrder order = MonomialOrder::grevlex());
  /// Combines like terms and sorts.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex());

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Constant term (zero when absent).
  GaussRat constant_term() const;

  const Term& lead_term() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().monomial; }
  const GaussRat& lead_coef() const { return terms_.front().coef; }
  int total_degree() const;
  std::vector<bool> support() const;

  Polynomial with_order(MonomialOrder order) const;
  Polynomial monic() const;
  Polynomial derivative(std::size_t var) const;
  Polynomial pow(unsigned k) const;
  /// Re-indexes variables: old variable i becomes new variable map[i].
  Polynomial remap(std::size_t new_nvars, std::span<const std::size_t> map,
                   MonomialOrder order) const;
  /// Substitutes polynomials (over a common target context) for each variable.
  Polynomial substitute(std::span<const Polynomial> values) const;

  GaussRat evaluate(std::span<const GaussRat> point) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

  /// this - c * m * g, the reduction step used by division.
  Polynomial sub_mul(const GaussRat& c, const Monomial& m, const Polynomial& g) const;
  Polynomial mul_term(const GaussRat& c, const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussRat& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussRat& c) { return a *= c; }
  friend Polynomial operator*(const GaussRat& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  /// Same terms; order tags may differ.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t nvars_ = 0;
  MonomialOrder order_{};
  std::vector<Term> terms_;

  void sort_terms();
  void combine(const Polynomial& o, bool subtract);
};

/// Default variable names x1..xn for ad-hoc printing.
std::vector<std::string> default_names(std::size_t nvars);

}  // namespace gwb::algebra
