#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <boost/multiprecision/mpfr.hpp>

#include "gwb/algebra/rational.hpp"

namespace gwb::numeric {

/// Fixed working precision of all extended-precision paths, in decimal digits.
inline constexpr int kRealDigits = 160;
/// Largest precision a caller may request; the rest is guard digits.
inline constexpr int kMaxDigits = 150;

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<kRealDigits>,
                                           boost::multiprecision::et_off>;

Real pi();
Real two_pi();

/// Decimal string in plain or scientific notation.
Real parse_real(std::string_view text);
Real to_real(const algebra::Rat& q);
/// Nearest integer.
algebra::Integer round_to_integer(const Real& r);
std::string format(const Real& r, int digits);

struct BigComplex {
  Real re{0};
  Real im{0};

  BigComplex() = default;
  BigComplex(Real r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  BigComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}
  explicit BigComplex(const algebra::GaussRat& g) : re(to_real(g.re())), im(to_real(g.im())) {}

  static BigComplex i() { return {Real(0), Real(1)}; }

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  BigComplex& operator/=(const BigComplex& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  BigComplex operator-() const { return {-re, -im}; }

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

Real abs(const BigComplex& z);
BigComplex exp(const BigComplex& z);
/// Principal branch, imaginary part in (-pi, pi].
BigComplex log(const BigComplex& z);
BigComplex pow(const BigComplex& z, long k);

/// Parses "re" or the pair form used in reports.
BigComplex parse_complex(std::string_view re, std::string_view im);

}  // namespace gwb::numeric
