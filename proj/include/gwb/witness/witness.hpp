#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwb/config/presentation.hpp"
#include "gwb/geometry/gsubvariety.hpp"
#include "gwb/numeric/sampler.hpp"

namespace gwb::witness {

using algebra::Rat;
using config::HSpec;
using geometry::GSubvariety;
using numeric::cd;

/// A point of G^n(C).
struct CPoint {
  std::vector<cd> x;
  std::vector<cd> y;

  std::size_t size() const { return x.size(); }
  /// x followed by y.
  numeric::CVec stacked() const;
  static CPoint unstack(const numeric::CVec& z);
  friend bool operator==(const CPoint&, const CPoint&) = default;
};

/// (p/q, r/s) standing for h = exp(p/q + (r/s) 2 pi i).
using HExponent = std::pair<Rat, Rat>;

struct WitnessOptions {
  double tol = 1e-10;
  long qmax = 50;
  /// Accuracy asked of h against theta(a). Newton absorbs the gap.
  double h_eps = 0.5;
  /// Regular points tried before giving up.
  int restarts = 8;
  int newton_iterations = 60;
  /// Trust-region cap on a single Newton step.
  double step_cap = 0.5;
  int polish_iterations = 6;
  /// Allowed distance of the start point from V in the transversality test.
  double on_variety_tol = 1e-7;
  numeric::SampleOptions sampling;
  /// Skip the approximation step and use these exponents.
  std::optional<std::vector<HExponent>> forced_h;
  /// Newton start point. Without forced_h the regular point is still sampled
  /// to choose h.
  std::optional<CPoint> start;
};

struct WitnessReport {
  CPoint point;
  std::vector<HExponent> h_exponents;
  double residual_variety = 0;
  double residual_gamma = 0;
  double jacobian_condition = 0;
  int iterations = 0;
  std::uint64_t seed = 0;
  /// Restart index that produced the witness.
  int restart = 0;
  double tol = 0;
  long qmax = 0;
  std::vector<std::string> log;
};

/// Regular point of V by random slicing and multi-start Newton. The slice count
/// is dim V; regularity means the Jacobian has rank 2n - dim V.
CPoint find_regular_point(const GSubvariety& v, std::uint64_t seed,
                          const numeric::SampleOptions& options = {});

/// True iff T_a V meets the tangent space of the theta-fibre through a only
/// in 0, i.e. the stacked Jacobian has full rank 2n.
bool check_fiber_transversality(const GSubvariety& v, const CPoint& a, double tol = 1e-7);
/// Dimension of T_a V intersected with the fibre tangent.
int fiber_tangent_overlap(const GSubvariety& v, const CPoint& a, double tol = 1e-7);

/// Componentwise principal log split as alpha + beta 2 pi i and rounded to the
/// best rationals with denominators <= qmax.
std::vector<HExponent> approximate_in_H(const std::vector<cd>& t, const HSpec& h, long qmax, double eps);

numeric::BigComplex h_value(const HExponent& e);

WitnessReport find_witness(const GSubvariety& v, const HSpec& h, std::uint64_t seed,
                           const WitnessOptions& options = {});

/// Structural checks plus both residuals recomputed in extended precision
/// against 10 * r.tol.
bool verify_witness(const WitnessReport& r, const GSubvariety& v, const HSpec& h);

/// Both residuals at `point` in extended precision.
std::pair<numeric::Real, numeric::Real> witness_residuals(const GSubvariety& v, const CPoint& point,
                                                          const std::vector<HExponent>& h);

}  // namespace gwb::witness
