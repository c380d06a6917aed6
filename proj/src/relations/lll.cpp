#include "gwb/relations/lll.hpp"

#include <utility>

#include "gwb/error.hpp"

namespace gwb::relations {

Integer dot(const IntRow& a, const IntRow& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// Nearest integer to a/b for b > 0, ties rounded up.
Integer round_div(const Integer& a, const Integer& b) {
  Integer num = 2 * a + b, den = 2 * b, q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

void sub_row(IntRow& a, const IntRow& b, const Integer& q) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= q * b[i];
}

// Cohen, integral LLL. Indices are 1-based internally; d[0] = 1.
class IntegralLll {
 public:
  IntegralLll(std::vector<IntRow> b, const Rat& delta)
      : n_(b.size()), b_(std::move(b)), p_(delta.get_num()), q_(delta.get_den()) {
    h_.assign(n_, IntRow(n_, 0));
    for (std::size_t i = 0; i < n_; ++i) h_[i][i] = 1;
    d_.assign(n_ + 1, 0);
    lambda_.assign(n_ + 1, std::vector<Integer>(n_ + 1, 0));
  }

  LllResult run() {
    if (n_ == 0) return {};
    d_[0] = 1;
    d_[1] = dot(b(1), b(1));
    if (sgn(d_[1]) == 0) throw Error(ErrorCode::DependentRows, "zero row in LLL input");
    std::size_t k = 2, kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        gram_schmidt(k);
      }
      while (true) {
        redi(k, k - 1);
        Integer lhs = q_ * d_[k] * d_[k - 2];
        Integer rhs = p_ * d_[k - 1] * d_[k - 1] - q_ * lambda_[k][k - 1] * lambda_[k][k - 1];
        if (lhs < rhs) {
          swapi(k, kmax);
          if (k > 2) --k;
          continue;
        }
        for (std::size_t l = k - 2; l >= 1; --l) redi(k, l);
        ++k;
        break;
      }
    }
    return {b_, h_};
  }

 private:
  std::size_t n_;
  std::vector<IntRow> b_;
  Integer p_, q_;
  std::vector<IntRow> h_;
  std::vector<Integer> d_;
  std::vector<std::vector<Integer>> lambda_;

  IntRow& b(std::size_t i) { return b_[i - 1]; }
  IntRow& h(std::size_t i) { return h_[i - 1]; }

  void gram_schmidt(std::size_t k) {
    for (std::size_t j = 1; j <= k; ++j) {
      Integer u = dot(b(k), b(j));
      for (std::size_t i = 1; i < j; ++i) u = (d_[i] * u - lambda_[k][i] * lambda_[j][i]) / d_[i - 1];
      if (j < k) {
        lambda_[k][j] = u;
      } else {
        d_[k] = u;
        if (sgn(u) == 0) throw Error(ErrorCode::DependentRows, "LLL input rows are dependent");
      }
    }
  }

  void redi(std::size_t k, std::size_t l) {
    if (abs(2 * lambda_[k][l]) <= d_[l]) return;
    Integer q = round_div(lambda_[k][l], d_[l]);
    sub_row(b(k), b(l), q);
    sub_row(h(k), h(l), q);
    lambda_[k][l] -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  void swapi(std::size_t k, std::size_t kmax) {
    std::swap(b(k), b(k - 1));
    std::swap(h(k), h(k - 1));
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    Integer lam = lambda_[k][k - 1];
    Integer bb = (d_[k - 2] * d_[k] + lam * lam) / d_[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      Integer t = lambda_[i][k];
      lambda_[i][k] = (d_[k] * lambda_[i][k - 1] - lam * t) / d_[k - 1];
      lambda_[i][k - 1] = (bb * t + lam * lambda_[i][k]) / d_[k];
    }
    d_[k - 1] = bb;
  }
};

}  // namespace

LllResult lll_reduce(const std::vector<IntRow>& rows, const Rat& delta) {
  if (delta <= Rat(1, 4) || delta > 1)
    throw Error(ErrorCode::InvalidArgument, "LLL parameter must lie in (1/4, 1]");
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw Error(ErrorCode::InvalidArgument, "ragged lattice basis");
  return IntegralLll(rows, delta).run();
}

bool is_lll_reduced(const std::vector<IntRow>& rows, const Rat& delta) {
  const std::size_t n = rows.size();
  if (n == 0) return true;
  const std::size_t m = rows[0].size();
  std::vector<std::vector<Rat>> star(n, std::vector<Rat>(m));
  std::vector<Rat> norm2(n);
  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < m; ++c) star[i][c] = Rat(rows[i][c]);
    for (std::size_t j = 0; j < i; ++j) {
      Rat num = 0;
      for (std::size_t c = 0; c < m; ++c) num += Rat(rows[i][c]) * star[j][c];
      mu[i][j] = num / norm2[j];
      for (std::size_t c = 0; c < m; ++c) star[i][c] -= mu[i][j] * star[j][c];
    }
    norm2[i] = 0;
    for (std::size_t c = 0; c < m; ++c) norm2[i] += star[i][c] * star[i][c];
    if (sgn(norm2[i]) == 0) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(mu[i][j]) > Rat(1, 2)) return false;
  for (std::size_t k = 1; k < n; ++k)
    if (norm2[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * norm2[k - 1]) return false;
  return true;
}

}  // namespace gwb::relations
