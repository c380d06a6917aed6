#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gwb::algebra {

using Integer = mpz_class;
/// Canonical rational: gmp keeps numerator and denominator coprime with a
/// positive denominator as long as every value passes through canonicalize().
using Rat = mpq_class;

/// Parses "a", "-a", "a/b". Decimal and exponent notation are rejected: exact
/// inputs must be written as ratios of integers.
Rat parse_rat(std::string_view text);
bool is_exact_rational_literal(std::string_view text);
std::string to_string(const Rat& q);
/// n/d in canonical form.
inline Rat make_rat(long n, long d) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

/// Element re + im*i of Q(i).
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return {Rat(0), Rat(1)}; }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return {re_, -im_}; }
  Rat norm() const { return re_ * re_ + im_ * im_; }
  GaussRat inverse() const;
  GaussRat pow(long e) const;

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  GaussRat operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "a/b" when real, otherwise "a/b+c/d*i".
  std::string to_string() const;

 private:
  Rat re_{0};
  Rat im_{0};
};

}  // namespace gwb::algebra
