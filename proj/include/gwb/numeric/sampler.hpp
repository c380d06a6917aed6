#pragma once

#include <functional>
#include <optional>

#include "gwb/numeric/system.hpp"

namespace gwb::numeric {

struct SampleOptions {
  int slicings = 16;
  int starts = 32;
  int max_iterations = 80;
  /// Residual accepted for the double-precision Newton phase.
  double tol = 1e-11;
  /// Radius of the random start box.
  double start_radius = 1.5;
  /// Relative singular-value threshold for the regularity test.
  double rank_tol = 1e-7;
  bool parallel = true;
};

/// A point on V cut out by d random affine slices A x = b.
struct SamplePoint {
  CVec point;
  CMat slice_a;
  CVec slice_b;
  int slicing = -1;
  int start = -1;
  double residual = 0;
  int iterations = 0;
};

using SampleFilter = std::function<bool(const SamplePoint&)>;

struct SampleStats {
  int attempts = 0;
  int converged = 0;
  /// Converged but the Jacobian rank was below the codimension.
  int singular = 0;
  /// Regular but refused by the filter.
  int rejected = 0;
};

/// Multi-start Gauss-Newton search for a regular point of the variety given by
/// `system` (expected dimension `dim`). Coordinates listed in `units` must stay
/// away from zero. Deterministic in `seed`: the lowest slicing index, then the
/// lowest start index, among accepted candidates wins, with or without
/// parallelism.
std::optional<SamplePoint> sample_regular_point(const PolySystem& system, std::size_t dim,
                                                std::span<const std::size_t> units,
                                                std::uint64_t seed, const SampleOptions& options,
                                                const SampleFilter& accept = {},
                                                SampleStats* stats = nullptr);

/// Newton polishing of a sample in extended precision on a square subsystem
/// (independent rows of V plus the slices). Returns the refined coordinates
/// and the max residual over all rows of V.
struct RefinedPoint {
  std::vector<BigComplex> point;
  Real residual{0};
};
RefinedPoint refine_extended(const PolySystem& system, const SamplePoint& sample, int iterations = 8);

/// Gauss-Newton iteration on a general (possibly overdetermined) system.
struct NewtonResult {
  CVec point;
  double residual = 0;
  int iterations = 0;
  bool converged = false;
};
NewtonResult gauss_newton(const std::function<CVec(const CVec&)>& f,
                          const std::function<CMat(const CVec&)>& jac, CVec start,
                          int max_iterations, double tol, double step_cap);

}  // namespace gwb::numeric
