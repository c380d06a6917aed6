#include "gwb/algebra/intmat.hpp"

#include <algorithm>

#include "gwb/error.hpp"

namespace gwb::algebra {

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols) {
  IntMat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Integer> IntMat::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool IntMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return sgn(v) == 0; });
}

std::size_t IntMat::rank() const { return rref(*this).size(); }

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  IntMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntMat IntMat::padded(std::size_t rows) const {
  IntMat r(rows, cols_);
  std::size_t out = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) zero = false;
    if (zero && rows_ > rows) continue;
    if (out >= rows) throw Error(ErrorCode::InvalidArgument, "too many nonzero rows to pad");
    for (std::size_t j = 0; j < cols_; ++j) r(out, j) = (*this)(i, j);
    ++out;
  }
  return r;
}

IntMat IntMat::nonzero_rows() const {
  std::vector<std::vector<Integer>> keep;
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    if (std::any_of(r.begin(), r.end(), [](const Integer& v) { return sgn(v) != 0; }))
      keep.push_back(std::move(r));
  }
  return from_rows(keep, cols_);
}

bool operator<(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (a.data_[k] != b.data_[k]) return a.data_[k] < b.data_[k];
  return false;
}

std::string IntMat::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).get_str();
    s += "]";
  }
  return s + "]";
}

std::vector<RatRow> rref(const std::vector<RatRow>& input) {
  std::vector<RatRow> m = input;
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < m.size(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.size() && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[lead], m[pivot]);
    Rat inv = 1 / m[lead][c];
    for (auto& v : m[lead]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead || sgn(m[r][c]) == 0) continue;
      Rat f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[lead][k];
    }
    ++lead;
  }
  m.resize(lead);
  return m;
}

std::vector<RatRow> rref(const IntMat& mat) {
  std::vector<RatRow> rows(mat.rows(), RatRow(mat.cols()));
  for (std::size_t i = 0; i < mat.rows(); ++i)
    for (std::size_t j = 0; j < mat.cols(); ++j) rows[i][j] = Rat(mat(i, j));
  return rref(rows);
}

std::size_t rational_rank(const std::vector<RatRow>& rows) { return rref(rows).size(); }

std::vector<RatRow> rational_kernel(const std::vector<RatRow>& rows, std::size_t cols) {
  auto r = rref(rows);
  std::vector<std::ptrdiff_t> pivot_of_col(cols, -1);
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(r[i][c]) != 0) {
        pivot_of_col[c] = static_cast<std::ptrdiff_t>(i);
        break;
      }
  }
  std::vector<RatRow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    RatRow v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (pivot_of_col[c] >= 0) v[c] = -r[static_cast<std::size_t>(pivot_of_col[c])][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Floor division with a positive divisor.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

IntMat hermite_normal_form(const IntMat& input) {
  std::vector<std::vector<Integer>> m;
  for (std::size_t i = 0; i < input.rows(); ++i) m.push_back(input.row(i));
  const std::size_t cols = input.cols();
  std::size_t lead = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < cols && lead < m.size(); ++c) {
    // Euclid on column c below row `lead`.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t r = lead; r < m.size(); ++r)
        if (sgn(m[r][c]) != 0 && (best == m.size() || abs(m[r][c]) < abs(m[best][c]))) best = r;
      if (best == m.size()) break;
      std::swap(m[lead], m[best]);
      bool done = true;
      for (std::size_t r = lead + 1; r < m.size(); ++r) {
        if (sgn(m[r][c]) == 0) continue;
        Integer q = m[r][c] / m[lead][c];
        for (std::size_t k = 0; k < cols; ++k) m[r][k] -= q * m[lead][k];
        if (sgn(m[r][c]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(m[lead][c]) == 0) continue;
    if (sgn(m[lead][c]) < 0)
      for (auto& v : m[lead]) v = -v;
    for (std::size_t r = 0; r < lead; ++r) {
      Integer q = floor_div(m[r][c], m[lead][c]);
      if (sgn(q) == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= q * m[lead][k];
    }
    pivot_cols.push_back(c);
    ++lead;
  }
  m.resize(lead);
  return IntMat::from_rows(m, cols);
}

std::vector<Integer> smith_invariants(const IntMat& input) {
  std::vector<std::vector<Integer>> a;
  for (std::size_t i = 0; i < input.rows(); ++i) a.push_back(input.row(i));
  const std::size_t rows = a.size();
  const std::size_t cols = input.cols();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (sgn(a[r][c]) != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
          pr = r;
          pc = c;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    while (true) {
      bool changed = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (sgn(a[r][t]) == 0) continue;
        Integer q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (sgn(a[r][t]) != 0) {
          std::swap(a[t], a[r]);
          changed = true;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (sgn(a[t][c]) == 0) continue;
        Integer q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        if (sgn(a[t][c]) != 0) {
          for (auto& row : a) std::swap(row[t], row[c]);
          changed = true;
        }
      }
      if (changed) continue;
      // Divisibility condition: fold any offending row into row t.
      bool fixed = true;
      for (std::size_t r = t + 1; r < rows && fixed; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (sgn(a[r][c] % a[t][t]) != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[r][k];
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::size_t smith_rank(const IntMat& m) { return smith_invariants(m).size(); }

std::vector<Integer> primitive_integer_row(const RatRow& row) {
  Integer den = 1;
  for (const auto& q : row) den = lcm(den, Integer(q.get_den()));
  std::vector<Integer> out;
  for (const auto& q : row) out.push_back(Integer(q.get_num()) * (den / q.get_den()));
  return primitive_integer_row(out);
}

std::vector<Integer> primitive_integer_row(const std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& v : row) g = gcd(g, v);
  std::vector<Integer> out = row;
  if (sgn(g) == 0) return out;
  for (auto& v : out) v /= g;
  for (const auto& v : out) {
    if (sgn(v) == 0) continue;
    if (sgn(v) < 0)
      for (auto& w : out) w = -w;
    break;
  }
  return out;
}

}  // namespace gwb::algebra
