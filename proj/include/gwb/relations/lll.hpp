#pragma once

#include <vector>

#include "gwb/algebra/rational.hpp"

namespace gwb::relations {

using algebra::Integer;
using algebra::Rat;
using IntRow = std::vector<Integer>;

struct LllResult {
  std::vector<IntRow> rows;
  /// Unimodular U with rows = U * input.
  std::vector<IntRow> transform;
};

/// Integral LLL (exact Gram-Schmidt via subdeterminants). `delta` must lie in
/// (1/4, 1]. Throws DependentRows when the input rows are linearly dependent.
LllResult lll_reduce(const std::vector<IntRow>& rows, const Rat& delta = Rat(99, 100));

/// Exact check of size reduction and the Lovasz condition.
bool is_lll_reduced(const std::vector<IntRow>& rows, const Rat& delta);

Integer dot(const IntRow& a, const IntRow& b);

}  // namespace gwb::relations
