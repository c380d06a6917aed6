#include "gwb/numeric/bigfloat.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "gwb/error.hpp"

namespace gwb::numeric {

using boost::multiprecision::atan2;
using boost::multiprecision::cos;
using boost::multiprecision::hypot;
using boost::multiprecision::sin;

Real pi() { return boost::math::constants::pi<Real>(); }

Real two_pi() { return 2 * pi(); }

Real parse_real(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty numeric literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' ||
          c == 'e' || c == 'E'))
      throw Error(ErrorCode::ParseError, "bad numeric literal \"" + s + "\"");
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad numeric literal \"" + s + "\"");
  }
}

Real to_real(const algebra::Rat& q) {
  Real num, den;
  mpfr_set_z(num.backend().data(), q.get_num_mpz_t(), MPFR_RNDN);
  mpfr_set_z(den.backend().data(), q.get_den_mpz_t(), MPFR_RNDN);
  return num / den;
}

algebra::Integer round_to_integer(const Real& r) {
  algebra::Integer z;
  mpfr_get_z(z.get_mpz_t(), r.backend().data(), MPFR_RNDN);
  return z;
}

std::string format(const Real& r, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << std::scientific << r;
  return out.str();
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  Real d = o.re * o.re + o.im * o.im;
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "complex division by zero");
  Real r = (re * o.re + im * o.im) / d;
  im = (im * o.re - re * o.im) / d;
  re = std::move(r);
  return *this;
}

Real abs(const BigComplex& z) { return hypot(z.re, z.im); }

BigComplex exp(const BigComplex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

BigComplex log(const BigComplex& z) {
  Real m = abs(z);
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "logarithm of zero");
  return {boost::multiprecision::log(m), atan2(z.im, z.re)};
}

BigComplex pow(const BigComplex& z, long k) {
  BigComplex base = k < 0 ? BigComplex(Real(1)) / z : z;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  BigComplex r(Real(1));
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

BigComplex parse_complex(std::string_view re, std::string_view im) {
  return {parse_real(re), parse_real(im)};
}

}  // namespace gwb::numeric
