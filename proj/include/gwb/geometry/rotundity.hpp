#pragma once

#include <optional>
#include <vector>

#include "gwb/geometry/gsubvariety.hpp"

namespace gwb::geometry {

enum class RotundStatus { RotundUpTo, NotRotund, StronglyRotundUpTo, NotStronglyRotund };

std::string to_string(RotundStatus s);

struct RotundityVerdict {
  RotundStatus status = RotundStatus::RotundUpTo;
  long bound = 0;
  /// Failing matrix, present iff the status is negative.
  std::optional<IntMat> witness;
  int witness_dim = -1;
  std::size_t witness_rank = 0;
  /// Number of row-space classes enumerated at this bound.
  std::size_t classes = 0;

  bool holds() const {
    return status == RotundStatus::RotundUpTo || status == RotundStatus::StronglyRotundUpTo;
  }
};

struct RotundityOptions {
  long bound = 3;
  bool parallel = true;
  GroebnerOptions groebner;
};

/// One representative per rational row space spanned by integer rows with
/// entries in [-bound, bound]: the Hermite normal form of the primitive rows
/// of the RREF, padded to n x n. Ordered by (rank, representative).
struct RowSpaceClass {
  IntMat representative;
  std::size_t rank = 0;
};
std::vector<RowSpaceClass> enumerate_row_space_classes(std::size_t n, long bound);

/// Canonical representative of the row space of m.
IntMat row_space_representative(const IntMat& m);

RotundityVerdict is_rotund(const GSubvariety& v, const RotundityOptions& options = {});
RotundityVerdict is_strongly_rotund(const GSubvariety& v, const RotundityOptions& options = {});

/// Kernels over a precomputed class list; both return the verdict for the
/// first failing class in list order. The serial one stops at that class, the
/// parallel one evaluates every class.
RotundityVerdict rotundity_serial(const GSubvariety& v, const std::vector<RowSpaceClass>& classes,
                                  bool strong, const RotundityOptions& options);
RotundityVerdict rotundity_parallel(const GSubvariety& v, const std::vector<RowSpaceClass>& classes,
                                    bool strong, const RotundityOptions& options);

}  // namespace gwb::geometry
