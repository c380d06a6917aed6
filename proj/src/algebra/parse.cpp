#include "gwb/algebra/parse.hpp"

#include <algorithm>
#include <cctype>

#include "gwb/error.hpp"

namespace gwb::algebra {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names, MonomialOrder order)
      : text_(text), names_(names), order_(order) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  std::string_view text_;
  std::span<const std::string> names_;
  MonomialOrder order_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial constant(const GaussRat& c) const { return Polynomial::constant(names_.size(), c, order_); }

  Polynomial expression() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial p = term();
    if (negate) p = -p;
    while (true) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else break;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = power();
    while (true) {
      if (accept('*')) {
        p = p * power();
      } else if (accept('/')) {
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        p *= d.constant_term().inverse();
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      return base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
        fail("floating literal; exact rationals required");
      return constant(GaussRat(parse_rat(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '.'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it != names_.end())
        return Polynomial::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()), order_);
      if (name == "i") return constant(GaussRat::i());
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names,
                            MonomialOrder order) {
  return Parser(text, names, order).parse();
}

std::vector<Polynomial> parse_polynomials(std::span<const std::string_view> texts,
                                          std::span<const std::string> names,
                                          MonomialOrder order) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(parse_polynomial(t, names, order));
  return out;
}

}  // namespace gwb::algebra
