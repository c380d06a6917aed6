#pragma once

#include <optional>
#include <vector>

#include "gwb/algebra/ideal.hpp"
#include "gwb/algebra/intmat.hpp"

namespace gwb::geometry {

using algebra::GaussRat;
using algebra::GroebnerOptions;
using algebra::IdealBasis;
using algebra::IntMat;
using algebra::Polynomial;

/// Subvariety of G^n = (Ga x Gm)^n in coordinates x1..xn, y1..yn. The ideal is
/// kept saturated at y1...yn and carries its grevlex Groebner basis.
class GSubvariety {
 public:
  GSubvariety() = default;
  /// Generators must live in the 2n coordinates. Throws MalformedVariety when
  /// the saturated ideal is the unit ideal.
  GSubvariety(std::size_t n, std::vector<Polynomial> generators, bool irreducible,
              const GroebnerOptions& options = {});
  /// Wraps an ideal already saturated at the y coordinates.
  static GSubvariety from_saturated(std::size_t n, const IdealBasis& ideal, bool irreducible,
                                    const GroebnerOptions& options = {});

  static std::vector<std::string> coordinate_names(std::size_t n);
  static std::size_t x(std::size_t i) { return i; }
  std::size_t y(std::size_t i) const { return n_ + i; }

  std::size_t n() const { return n_; }
  const IdealBasis& ideal() const { return ideal_; }
  const std::vector<Polynomial>& groebner() const { return ideal_.groebner(); }
  bool irreducible() const { return irreducible_; }
  int dimension() const { return dimension_; }

 private:
  std::size_t n_ = 0;
  IdealBasis ideal_;
  bool irreducible_ = false;
  int dimension_ = 0;

  void finish(const GroebnerOptions& options);
};

/// Zariski closure of M.V: u = Mx, v = y^M, originals eliminated.
GSubvariety act(const IntMat& m, const GSubvariety& v, const GroebnerOptions& options = {});
int dim_image(const IntMat& m, const GSubvariety& v, const GroebnerOptions& options = {});

/// Exponent split M = M+ - M- into nonnegative parts.
void split_exponents(const std::vector<algebra::Integer>& row, std::vector<int>& plus,
                     std::vector<int>& minus);

}  // namespace gwb::geometry
