#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "gwb/algebra/polynomial.hpp"
#include "gwb/numeric/bigfloat.hpp"

namespace gwb::numeric {

using cd = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Polynomials flattened for repeated numeric evaluation.
class PolySystem {
 public:
  PolySystem() = default;
  PolySystem(std::span<const algebra::Polynomial> polys, std::size_t nvars);

  std::size_t size() const { return polys_.size(); }
  std::size_t nvars() const { return nvars_; }

  CVec evaluate(const CVec& x) const;
  CMat jacobian(const CVec& x) const;
  std::vector<BigComplex> evaluate(std::span<const BigComplex> x) const;
  /// Rows restricted to `rows`.
  std::vector<std::vector<BigComplex>> jacobian(std::span<const BigComplex> x,
                                                std::span<const std::size_t> rows) const;
  std::vector<BigComplex> evaluate_rows(std::span<const BigComplex> x,
                                        std::span<const std::size_t> rows) const;

 private:
  struct Term {
    cd coef;
    algebra::GaussRat exact;
    std::vector<std::pair<std::size_t, int>> powers;
  };
  std::vector<std::vector<Term>> polys_;
  std::size_t nvars_ = 0;

  BigComplex eval_poly(std::size_t p, std::span<const BigComplex> x) const;
  BigComplex eval_derivative(std::size_t p, std::size_t var, std::span<const BigComplex> x) const;
};

/// Numerical rank from singular values relative to the largest one.
std::size_t numerical_rank(const CMat& m, double rel_tol = 1e-8);
double condition_number(const CMat& m);

/// Solves the square system a * x = b by Gaussian elimination with partial
/// pivoting in extended precision.
std::vector<BigComplex> solve_big(std::vector<std::vector<BigComplex>> a, std::vector<BigComplex> b);

/// splitmix64 mixing used to derive independent streams from (seed, indices).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace gwb::numeric
