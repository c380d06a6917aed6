#pragma once

#include <optional>
#include <vector>

#include "gwb/config/presentation.hpp"
#include "gwb/geometry/rotundity.hpp"
#include "gwb/numeric/bigfloat.hpp"

namespace gwb::config {

struct PredimReport {
  int td = 0;
  int ldim = 0;
  int delta = 0;
  /// Transcendence degrees are always symbolic here.
  std::string td_mode = "symbolic";
};

/// delta(b/A) = td(b/A) - ldim_Q(b/Gamma(A)). `a` lists generator indices of the
/// sub-presentation; constants always belong to it. Each b_j must be declared.
PredimReport predimension(const GammaPresentation& p, const std::vector<std::size_t>& a,
                          const std::vector<RatRow>& b, const GroebnerOptions& options = {});

/// td of the coordinates of b over the field generated by the generators in
/// `base` (constants are not added here).
int transcendence_degree(const GammaPresentation& p, const std::vector<std::size_t>& base,
                         const std::vector<RatRow>& b, const GroebnerOptions& options = {});

/// ldim_Q(b / Gamma(A)) from Smith ranks.
int linear_dimension(const GammaPresentation& p, const std::vector<std::size_t>& a,
                     const std::vector<RatRow>& b);

enum class ClosedStatus { ClosedUpTo, NotClosed };
std::string to_string(ClosedStatus s);

struct ClosedOptions {
  std::size_t rank_bound = 1;
  long comb_bound = 2;
  /// Tuple budget; exceeding it raises ResourceExhausted.
  std::size_t max_tuples = 20000;
  bool parallel = true;
  GroebnerOptions groebner;
};

struct ClosedVerdict {
  ClosedStatus status = ClosedStatus::ClosedUpTo;
  std::size_t rank_bound = 0;
  long comb_bound = 0;
  std::vector<RatRow> witness;
  PredimReport witness_predim;
  std::size_t tuples = 0;
};

/// Candidate Gamma-points: integer combinations of the declarations with
/// coefficients in [-bound, bound], one per rational direction, in order of
/// increasing max coefficient then lexicographic; points of Gamma(A) skipped.
std::vector<RatRow> closure_candidates(const GammaPresentation& p, const std::vector<std::size_t>& a,
                                       long bound);

ClosedVerdict is_rel_gamma_closed(const GammaPresentation& p, const std::vector<std::size_t>& a,
                                  const ClosedOptions& options = {});
/// Kernels over a fixed candidate list; both report the first tuple (by length,
/// then index order) with delta <= 0.
ClosedVerdict closed_search_serial(const GammaPresentation& p, const std::vector<std::size_t>& a,
                                   const std::vector<RatRow>& candidates, const ClosedOptions& options);
ClosedVerdict closed_search_parallel(const GammaPresentation& p, const std::vector<std::size_t>& a,
                                     const std::vector<RatRow>& candidates, const ClosedOptions& options);

struct BlurResult {
  GammaPresentation presentation;
  /// Indices of the generators added for H.
  std::vector<std::size_t> h_generators;
};

/// Gamma_H from an exponential-graph configuration.
BlurResult blur(const GammaPresentation& p, const HSpec& h, const GroebnerOptions& options = {});

struct AxsOptions {
  long bound = 10;
  numeric::Real tol = numeric::Real("1e-20");
  int digits = 50;
};

struct AxsWitness {
  /// Rows m with sum m_i x_i in span_Q(C) and prod y_i^m_i a constant: the
  /// canonical basis of their rational row space.
  IntMat m;
  /// Per row: rational coefficients over C_basis of sum m_i x_i.
  std::vector<std::vector<Rat>> x_constants;
  /// Per row: the constant prod y_i^m_i.
  std::vector<numeric::BigComplex> y_constants;
  /// Largest re-evaluated defect over rows and both conditions.
  numeric::Real residual{0};
  bool trivial_j = false;
};

std::optional<AxsWitness> ax_schanuel_witness(const std::vector<numeric::BigComplex>& x,
                                              const std::vector<numeric::BigComplex>& y,
                                              const std::vector<numeric::BigComplex>& c_basis,
                                              const AxsOptions& options = {});

/// Re-evaluates both defining conditions of one row.
numeric::Real axs_row_defect(const std::vector<numeric::BigComplex>& x,
                             const std::vector<numeric::BigComplex>& y,
                             const std::vector<numeric::BigComplex>& c_basis,
                             const std::vector<Integer>& m, const std::vector<Rat>& x_constant,
                             const numeric::BigComplex& y_constant);

/// loc(a/C) in G^k as a subvariety, C the constants of p.
geometry::GSubvariety locus(const GammaPresentation& p, const std::vector<RatRow>& a,
                            const GroebnerOptions& options = {});

/// Strong rotundity of loc(a/C) x V.
geometry::RotundityVerdict locus_strong_rotund(const GammaPresentation& p, const std::vector<RatRow>& a,
                                               const geometry::GSubvariety& v,
                                               const geometry::RotundityOptions& options = {});

}  // namespace gwb::config
