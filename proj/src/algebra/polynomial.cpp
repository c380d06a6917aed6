#include "gwb/algebra/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "gwb/error.hpp"

namespace gwb::algebra {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t var, int power) {
  Monomial m(nvars);
  m.exps_[var] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0) s.push_back(i);
  return s;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  int deg = 0;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = deg;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
  return true;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case Kind::Lex:
      for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::GrevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      return grevlex_range(a, b, 0, a.nvars());
    case Kind::Block: {
      int c = grevlex_range(a, b, 0, block);
      if (c != 0) return c;
      return grevlex_range(a, b, block, a.nvars());
    }
  }
  return 0;
}

std::string to_string(const MonomialOrder& order) {
  switch (order.kind) {
    case MonomialOrder::Kind::Lex: return "lex";
    case MonomialOrder::Kind::GrevLex: return "grevlex";
    case MonomialOrder::Kind::Block: return "block(" + std::to_string(order.block) + ")";
  }
  return "?";
}

Polynomial Polynomial::constant(std::size_t nvars, const GaussRat& c, MonomialOrder order) {
  Polynomial p(nvars, order);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var, MonomialOrder order) {
  Polynomial p(nvars, order);
  p.terms_.push_back({Monomial::variable(nvars, var), GaussRat(1)});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const GaussRat& c, MonomialOrder order) {
  Polynomial p(m.nvars(), order);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms,
                                  MonomialOrder order) {
  Polynomial p(nvars, order);
  for (auto& t : terms)
    if (t.monomial.nvars() != nvars)
      throw Error(ErrorCode::InvalidArgument, "term arity does not match variable context");
  p.terms_ = std::move(terms);
  p.sort_terms();
  return p;
}

void Polynomial::sort_terms() {
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return order_.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.coef.is_zero(); }),
               merged.end());
  terms_ = std::move(merged);
}

GaussRat Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coef;
  return GaussRat(0);
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

std::vector<bool> Polynomial::support() const {
  std::vector<bool> s(nvars_, false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.monomial[i] > 0) s[i] = true;
  return s;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  Polynomial p = *this;
  p.order_ = order;
  std::sort(p.terms_.begin(), p.terms_.end(), [&order](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  return p;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lead_coef().is_one()) return *this;
  Polynomial p = *this;
  GaussRat inv = lead_coef().inverse();
  for (auto& t : p.terms_) t.coef *= inv;
  return p;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.monomial[var];
    if (e == 0) continue;
    std::vector<int> exps = t.monomial.exponents();
    exps[var] -= 1;
    out.push_back({Monomial(std::move(exps)), t.coef * GaussRat(e)});
  }
  return from_terms(nvars_, std::move(out), order_);
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, GaussRat(1), order_);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::remap(std::size_t new_nvars, std::span<const std::size_t> map,
                             MonomialOrder order) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> exps(new_nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.monomial[i] == 0) continue;
      if (map[i] >= new_nvars)
        throw Error(ErrorCode::InvalidArgument, "remap drops a variable that is in use");
      exps[map[i]] += t.monomial[i];
    }
    out.push_back({Monomial(std::move(exps)), t.coef});
  }
  return from_terms(new_nvars, std::move(out), order);
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values) const {
  if (values.size() != nvars_) throw Error(ErrorCode::InvalidArgument, "substitute arity");
  std::size_t target = values.empty() ? 0 : values[0].nvars();
  MonomialOrder order = values.empty() ? order_ : values[0].order();
  Polynomial result(target, order);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coef, order);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.monomial[i] > 0) term = term * values[i].pow(static_cast<unsigned>(t.monomial[i]));
    result += term;
  }
  return result;
}

GaussRat Polynomial::evaluate(std::span<const GaussRat> point) const {
  GaussRat sum(0);
  for (const auto& t : terms_) {
    GaussRat v = t.coef;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.monomial[i] > 0) v *= point[i].pow(t.monomial[i]);
    sum += v;
  }
  return sum;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> point) const {
  std::complex<double> sum = 0.0;
  for (const auto& t : terms_) {
    std::complex<double> v = t.coef.to_complex();
    for (std::size_t i = 0; i < nvars_; ++i)
      for (int k = 0; k < t.monomial[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

void Polynomial::combine(const Polynomial& o, bool subtract) {
  if (o.nvars_ != nvars_) throw Error(ErrorCode::InvalidArgument, "variable context mismatch");
  const Polynomial& rhs = (o.order_ == order_) ? o : o.with_order(order_);
  std::vector<Term> out;
  out.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    int c;
    if (a == terms_.end()) c = -1;
    else if (b == rhs.terms_.end()) c = 1;
    else c = order_.compare(a->monomial, b->monomial);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(subtract ? Term{b->monomial, -b->coef} : *b);
      ++b;
    } else {
      GaussRat s = subtract ? a->coef - b->coef : a->coef + b->coef;
      if (!s.is_zero()) out.push_back({std::move(a->monomial), std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  combine(o, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  combine(o, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Polynomial Polynomial::mul_term(const GaussRat& c, const Monomial& m) const {
  Polynomial p(nvars_, order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coef * c});
  return p;
}

Polynomial Polynomial::sub_mul(const GaussRat& c, const Monomial& m, const Polynomial& g) const {
  Polynomial out = *this;
  out -= g.mul_term(c, m);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::InvalidArgument, "variable context mismatch");
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coef * t.coef});
  return Polynomial::from_terms(a.nvars_, std::move(out), a.order_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  const Polynomial& bb = (a.order_ == b.order_) ? b : b.with_order(a.order_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == bb.terms_[i].monomial)) return false;
    if (a.terms_[i].coef != bb.terms_[i].coef) return false;
  }
  return true;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coef.to_string();
    bool complex = !t.coef.is_real() && sgn(t.coef.re()) != 0;
    if (complex) c = "(" + c + ")";
    if (!first) {
      s += (c.front() == '-') ? " - " : " + ";
      if (c.front() == '-') c.erase(0, 1);
    }
    first = false;
    if (t.monomial.is_one()) {
      s += c;
      continue;
    }
    if (c == "-1") s += "-";
    else if (c != "1") s += c + "*";
    bool first_var = true;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.monomial[i] == 0) continue;
      if (!first_var) s += "*";
      first_var = false;
      s += names[i];
      if (t.monomial[i] > 1) s += "^" + std::to_string(t.monomial[i]);
    }
  }
  return s;
}

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("v" + std::to_string(i + 1));
  return names;
}

}  // namespace gwb::algebra
