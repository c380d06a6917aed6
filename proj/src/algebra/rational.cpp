#include "gwb/algebra/rational.hpp"

#include <cctype>

#include "gwb/error.hpp"

namespace gwb::algebra {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

bool is_exact_rational_literal(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return is_integer_literal(text);
  auto den = text.substr(slash + 1);
  if (den.empty() || den.front() == '-' || den.front() == '+') return false;
  return is_integer_literal(text.substr(0, slash)) && is_integer_literal(den);
}

Rat parse_rat(std::string_view text) {
  if (!is_exact_rational_literal(text))
    throw Error(ErrorCode::ParseError,
                "exact rational required, got \"" + std::string(text) + "\"");
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  if (slash != std::string::npos && s[slash + 1] == '+') s.erase(slash + 1, 1);
  Rat q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational \"" + s + "\"");
  if (sgn(q.get_den()) == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(10); }

GaussRat GaussRat::inverse() const {
  Rat n = norm();
  return {re_ / n, -im_ / n};
}

GaussRat GaussRat::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  GaussRat result(1);
  GaussRat base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rat r = re_ * o.re_ - im_ * o.im_;
  Rat i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussRat::to_string() const {
  if (sgn(im_) == 0) return algebra::to_string(re_);
  std::string s;
  if (sgn(re_) != 0) s = algebra::to_string(re_) + (sgn(im_) > 0 ? "+" : "");
  return s + algebra::to_string(im_) + "*i";
}

}  // namespace gwb::algebra
