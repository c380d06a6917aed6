#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwb/algebra/ideal.hpp"
#include "gwb/algebra/intmat.hpp"
#include "gwb/geometry/gsubvariety.hpp"

namespace gwb::config {

using algebra::GaussRat;
using algebra::GroebnerOptions;
using algebra::IdealBasis;
using algebra::Integer;
using algebra::IntMat;
using algebra::Polynomial;
using algebra::Rat;
using algebra::RatRow;

/// Blur group H inside Gm.
struct HSpec {
  enum class Kind { Trivial, LatticeExp, ConstantsField };
  Kind kind = Kind::Trivial;
  /// LatticeExp: labels such as "1" or "2*pi*i".
  std::vector<std::string> basis;
  /// ConstantsField: "gm(C)" or "gm(F)".
  std::string tag;

  friend bool operator==(const HSpec&, const HSpec&) = default;
};

std::string to_string(HSpec::Kind k);

/// A finitely presented Gamma-field configuration. Generator k is the pair
/// (xi_k, upsilon_k) with coordinate names "<label>_x" and "<label>_y"; the
/// relation ideal lives in the 2K coordinates laid out as xi_1..xi_K,
/// upsilon_1..upsilon_K and is kept saturated at the upsilons. A declared
/// Gamma-point is a rational coefficient vector q over the generators, standing
/// for (sum q_k xi_k, prod upsilon_k^q_k); the declared lattice is the Z-span of
/// the declarations.
class GammaPresentation {
 public:
  GammaPresentation() = default;
  /// Throws MalformedPresentation on duplicate labels, bad declarations or an
  /// empty relation variety.
  GammaPresentation(std::vector<std::string> labels, std::vector<bool> constant,
                    std::vector<Polynomial> relations, std::vector<RatRow> gamma, HSpec blur,
                    long denominator_bound, const GroebnerOptions& options = {});

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<bool>& constant() const { return constant_; }
  const std::vector<RatRow>& gamma() const { return gamma_; }
  const HSpec& blur() const { return blur_; }
  long denominator_bound() const { return denominator_bound_; }
  /// Relations as given (before saturation), for serialization.
  const std::vector<Polynomial>& relations() const { return relations_; }
  /// Saturated relation ideal viewed as a subvariety of G^K.
  const geometry::GSubvariety& variety() const { return variety_; }

  std::vector<std::string> coordinate_names() const;
  static std::vector<std::string> coordinate_names(const std::vector<std::string>& labels);
  std::optional<std::size_t> index_of(const std::string& label) const;

  /// Generator indices forming the sub-presentation A plus every constant.
  std::vector<std::size_t> with_constants(const std::vector<std::size_t>& a) const;

 private:
  std::vector<std::string> labels_;
  std::vector<bool> constant_;
  std::vector<Polynomial> relations_;
  std::vector<RatRow> gamma_;
  HSpec blur_;
  long denominator_bound_ = 1;
  geometry::GSubvariety variety_;
};

/// w lies in the Z-span of `rows`.
bool in_lattice(const std::vector<RatRow>& rows, const RatRow& w);
/// Z-basis of the lattice spanned by `rows` intersected with the coordinates in
/// `support` (all other entries zero).
std::vector<RatRow> sublattice_supported_on(const std::vector<RatRow>& rows,
                                            const std::vector<std::size_t>& support);
/// w is in the declared lattice.
bool is_declared(const GammaPresentation& p, const RatRow& w);

/// Generators g with k*g declared for some 2 <= k <= denominator_bound while g
/// itself is not; empty when the declarations are pure at that bound.
std::vector<std::size_t> purity_violations(const GammaPresentation& p);

}  // namespace gwb::config
