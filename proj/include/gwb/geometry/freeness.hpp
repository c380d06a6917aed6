#pragma once

#include <optional>
#include <vector>

#include "gwb/geometry/gsubvariety.hpp"
#include "gwb/numeric/sampler.hpp"

namespace gwb::geometry {

using algebra::Integer;

struct AdditiveFreeness {
  bool free = true;
  /// sum m_i x_i = c on V when not free.
  std::vector<Integer> m;
  GaussRat c;
};

/// Exact: linear algebra on the normal forms of x_1..x_n.
AdditiveFreeness is_additively_free(const GSubvariety& v, const GroebnerOptions& options = {});

/// Normal form of sum m_i x_i, or nullopt when it is not a constant.
std::optional<GaussRat> additive_constant(const GSubvariety& v, const std::vector<Integer>& m);

enum class MultStatus { FreeUpTo, NotFree, Unknown };
std::string to_string(MultStatus s);

struct MultiplicativeFreeness {
  MultStatus status = MultStatus::FreeUpTo;
  long bound = 0;
  /// prod y_i^{m_i} = c, symbolically confirmed when status is NotFree; for
  /// Unknown the candidate that failed confirmation.
  std::vector<Integer> m;
  GaussRat c;
  std::size_t samples = 0;
};

struct MultiplicativeOptions {
  long bound = 10;
  std::uint64_t seed = 1;
  /// Sample points beyond the first; each adds one log-difference equation.
  int extra_samples = 3;
  int digits = 60;
  numeric::SampleOptions sampling;
  GroebnerOptions groebner;
};

MultiplicativeFreeness is_multiplicatively_free(const GSubvariety& v,
                                                const MultiplicativeOptions& options = {});

/// Normal form of y^{m+} z^{m-} modulo I + <y z - 1>, or nullopt when it is not a constant.
std::optional<GaussRat> multiplicative_constant(const GSubvariety& v, const std::vector<Integer>& m,
                                                const GroebnerOptions& options = {});

struct FibreReport {
  int fiber_dim = 0;
  int dim_j = 0;
  bool satisfies_lemma = false;
};

/// Dimension of V ∩ (gamma + TJ) for J = {y^M = 1}.
FibreReport fibre_dim_check(const GSubvariety& v, const IntMat& m, const std::vector<GaussRat>& gamma,
                            const GroebnerOptions& options = {});

}  // namespace gwb::geometry
