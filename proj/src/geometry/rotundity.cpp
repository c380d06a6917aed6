#include "gwb/geometry/rotundity.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>

#include "gwb/error.hpp"

namespace gwb::geometry {

using algebra::Integer;
using algebra::Rat;
using algebra::RatRow;

std::string to_string(RotundStatus s) {
  switch (s) {
    case RotundStatus::RotundUpTo: return "RotundUpTo";
    case RotundStatus::NotRotund: return "NotRotund";
    case RotundStatus::StronglyRotundUpTo: return "StronglyRotundUpTo";
    case RotundStatus::NotStronglyRotund: return "NotStronglyRotund";
  }
  return "?";
}

namespace {

std::vector<std::vector<Integer>> primitive_vectors(std::size_t n, long bound) {
  std::vector<std::vector<Integer>> out;
  std::vector<long> v(n, -bound);
  while (true) {
    long g = 0;
    for (long e : v) g = std::gcd(g, e);
    std::size_t first = 0;
    while (first < n && v[first] == 0) ++first;
    if (g == 1 && first < n && v[first] > 0) {
      std::vector<Integer> row;
      for (long e : v) row.emplace_back(e);
      out.push_back(std::move(row));
    }
    std::size_t k = 0;
    while (k < n && v[k] == bound) v[k++] = -bound;
    if (k == n) break;
    ++v[k];
  }
  return out;
}

IntMat representative_from_rref(const std::vector<RatRow>& rref_rows, std::size_t n) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : rref_rows) rows.push_back(algebra::primitive_integer_row(r));
  return algebra::hermite_normal_form(IntMat::from_rows(rows, n)).padded(n);
}

bool fails(int dim, std::size_t rank, bool strong) {
  return strong ? dim <= static_cast<int>(rank) : dim < static_cast<int>(rank);
}

RotundityVerdict positive(bool strong, long bound, std::size_t classes) {
  RotundityVerdict v;
  v.status = strong ? RotundStatus::StronglyRotundUpTo : RotundStatus::RotundUpTo;
  v.bound = bound;
  v.classes = classes;
  return v;
}

RotundityVerdict negative(bool strong, long bound, std::size_t classes, const IntMat& m, int dim,
                          std::size_t rank) {
  RotundityVerdict v;
  v.status = strong ? RotundStatus::NotStronglyRotund : RotundStatus::NotRotund;
  v.bound = bound;
  v.classes = classes;
  v.witness = m;
  v.witness_dim = dim;
  v.witness_rank = rank;
  return v;
}

RotundityVerdict check(const GSubvariety& v, bool strong, const RotundityOptions& options) {
  if (!v.irreducible())
    throw Error(ErrorCode::InvalidArgument, "rotundity is only meaningful for varieties asserted irreducible");
  if (options.bound < 1) throw Error(ErrorCode::InvalidArgument, "bound must be positive");
  const std::size_t n = v.n();
  auto classes = enumerate_row_space_classes(n, options.bound);
  if (fails(v.dimension(), n, strong))
    return negative(strong, options.bound, classes.size(), IntMat::identity(n), v.dimension(), n);
  return options.parallel ? rotundity_parallel(v, classes, strong, options)
                          : rotundity_serial(v, classes, strong, options);
}

}  // namespace

IntMat row_space_representative(const IntMat& m) {
  return representative_from_rref(algebra::rref(m), m.cols());
}

std::vector<RowSpaceClass> enumerate_row_space_classes(std::size_t n, long bound) {
  auto prim = primitive_vectors(n, bound);
  std::map<std::vector<RatRow>, bool> seen;
  std::vector<RowSpaceClass> out;
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    if (r > prim.size()) break;
    while (true) {
      std::vector<RatRow> rows;
      for (auto i : idx) {
        RatRow row;
        for (const auto& e : prim[i]) row.emplace_back(e);
        rows.push_back(std::move(row));
      }
      auto key = algebra::rref(rows);
      if (key.size() == r && !seen.count(key)) {
        seen[key] = true;
        out.push_back({representative_from_rref(key, n), r});
      }
      // Next combination.
      std::size_t k = r;
      while (k > 0 && idx[k - 1] == prim.size() - r + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  out.push_back({IntMat::identity(n), n});
  std::stable_sort(out.begin(), out.end(), [](const RowSpaceClass& a, const RowSpaceClass& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.representative < b.representative;
  });
  return out;
}

RotundityVerdict rotundity_serial(const GSubvariety& v, const std::vector<RowSpaceClass>& classes,
                                  bool strong, const RotundityOptions& options) {
  for (const auto& c : classes) {
    int d = dim_image(c.representative, v, options.groebner);
    if (fails(d, c.rank, strong))
      return negative(strong, options.bound, classes.size(), c.representative, d, c.rank);
  }
  return positive(strong, options.bound, classes.size());
}

RotundityVerdict rotundity_parallel(const GSubvariety& v, const std::vector<RowSpaceClass>& classes,
                                    bool strong, const RotundityOptions& options) {
  const auto count = static_cast<std::ptrdiff_t>(classes.size());
  std::vector<int> dims(classes.size(), 0);
  std::vector<std::exception_ptr> errors(classes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    auto i = static_cast<std::size_t>(k);
    try {
      dims[i] = dim_image(classes[i].representative, v, options.groebner);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (fails(dims[i], classes[i].rank, strong))
      return negative(strong, options.bound, classes.size(), classes[i].representative, dims[i],
                      classes[i].rank);
  }
  return positive(strong, options.bound, classes.size());
}

RotundityVerdict is_rotund(const GSubvariety& v, const RotundityOptions& options) {
  return check(v, false, options);
}

RotundityVerdict is_strongly_rotund(const GSubvariety& v, const RotundityOptions& options) {
  return check(v, true, options);
}

}  // namespace gwb::geometry
