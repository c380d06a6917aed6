#pragma once

#include <string>
#include <vector>

#include "gwb/algebra/intmat.hpp"
#include "gwb/algebra/polynomial.hpp"

namespace gwb::ede {

using algebra::GaussRat;
using algebra::IntMat;
using algebra::Polynomial;

/// Power series over Q(i) truncated after t^N; coefficient k multiplies t^k.
class Series {
 public:
  Series() = default;
  /// Zero series with N + 1 coefficients.
  explicit Series(std::size_t order);
  explicit Series(std::vector<GaussRat> coeffs);
  static Series constant(std::size_t order, const GaussRat& c);
  /// t itself.
  static Series t(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<GaussRat>& coeffs() const { return coeffs_; }
  const GaussRat& operator[](std::size_t k) const { return coeffs_[k]; }
  GaussRat& operator[](std::size_t k) { return coeffs_[k]; }

  /// Orders must agree (LengthMismatch otherwise).
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const GaussRat& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const GaussRat& c) { return a *= c; }
  friend Series operator*(const GaussRat& c, Series a) { return a *= c; }
  /// Truncated Cauchy product.
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series&, const Series&) = default;

  /// Leading coefficients through order k.
  Series truncate(std::size_t k) const;

 private:
  std::vector<GaussRat> coeffs_;
};

/// Termwise derivative. The result keeps N + 1 coefficients with a zero at
/// order N, so it is only meaningful through N - 1.
Series d(const Series& s);

/// exp(x) for x(0) = 0, from k c_k = sum_j j a_j c_{k-j}.
Series exp_series(const Series& x);

struct DiffPoint {
  Series x;
  Series y;
};

/// Dy = y Dx through order n - 1 and y(0) != 0.
bool in_gamma_de(const DiffPoint& p, std::size_t n);

/// (x, c exp(x)).
DiffPoint make_gamma_point(const Series& x, const GaussRat& c);

enum class EdeStatus { NoRelationAtBound, RelationFound, SubgroupFound };
std::string to_string(EdeStatus s);

struct EdeVerdict {
  EdeStatus status = EdeStatus::NoRelationAtBound;
  /// Integer rows m with sum m_i x_i constant, as an HNF basis.
  IntMat subgroup;
  /// Basis of the polynomial relations of degree <= D over x1..xn, y1..yn.
  std::vector<Polynomial> relations;
  std::size_t degree_bound = 0;
  std::size_t monomials = 0;
  /// Identities hold through this order.
  std::size_t checked_order = 0;
};

/// 3 (D + 1) n, the smallest N accepted at all.
std::size_t resolution_floor(std::size_t n, std::size_t degree_bound);

/// Subgroup search first, then a kernel over the coefficient matrix of all
/// monomials of degree <= D. The second stage also needs N >= that monomial
/// count; below it ResolutionTooLow is raised rather than a spurious relation.
EdeVerdict empirical_ax_schanuel(const std::vector<DiffPoint>& points, std::size_t degree_bound,
                                 std::size_t order);

/// Monomials of degree <= D in `nvars` variables, by degree then grevlex.
std::vector<algebra::Monomial> monomials_up_to(std::size_t nvars, std::size_t degree_bound);

/// Names x1..xn, y1..yn.
std::vector<std::string> coordinate_names(std::size_t n);

}  // namespace gwb::ede
