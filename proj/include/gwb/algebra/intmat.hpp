#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gwb/algebra/rational.hpp"

namespace gwb::algebra {

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMat(std::initializer_list<std::initializer_list<long>> rows);
  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Integer> row(std::size_t r) const;

  bool is_zero() const;
  /// Rank of the rational row space.
  std::size_t rank() const;
  IntMat operator*(const IntMat& o) const;
  /// Pads with zero rows (or truncates zero rows) to `rows` rows.
  IntMat padded(std::size_t rows) const;
  /// Drops all-zero rows.
  IntMat nonzero_rows() const;

  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  /// Lexicographic on (rows, cols, entries).
  friend bool operator<(const IntMat& a, const IntMat& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

using RatRow = std::vector<Rat>;

/// Reduced row echelon form over Q with zero rows dropped; canonical for the
/// rational row space.
std::vector<RatRow> rref(const std::vector<RatRow>& rows);
std::vector<RatRow> rref(const IntMat& m);
std::size_t rational_rank(const std::vector<RatRow>& rows);
/// Basis of {v : rows * v = 0} over Q.
std::vector<RatRow> rational_kernel(const std::vector<RatRow>& rows, std::size_t cols);

/// Row-style Hermite normal form: upper echelon, positive pivots, entries above
/// each pivot reduced into [0, pivot). Zero rows dropped.
IntMat hermite_normal_form(const IntMat& m);
/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(const IntMat& m);
std::size_t smith_rank(const IntMat& m);

/// Clears denominators and divides by the content; the first nonzero entry is
/// made positive.
std::vector<Integer> primitive_integer_row(const RatRow& row);
std::vector<Integer> primitive_integer_row(const std::vector<Integer>& row);

}  // namespace gwb::algebra
