#include "dfm/ratfunc.hpp"

#include <cctype>
#include <optional>

namespace dfm {

RatFunc RatFunc::normalize(Poly num, Poly den) {
  if (den.is_zero()) throw ZeroDenominator();
  if (num.is_zero()) return RatFunc();
  if (den.degree() > 0) {
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
  }
  if (!den.is_monic()) {
    Rational inv = inverse(den.lead());
    num = num * inv;
    den = den * inv;
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw Error("not a constant: " + str());
  return num_.coeff(0);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatFunc::normalize(a.num_ + b.num_, a.den_);
  return RatFunc::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_, 0); }

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_);
  if (a.is_constant()) return RatFunc(b.num_ * a.num_.coeff(0), b.den_, 0);
  if (b.is_constant()) return RatFunc(a.num_ * b.num_.coeff(0), a.den_, 0);
  return RatFunc::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * inverse(b); }

RatFunc inverse(const RatFunc& f) {
  if (f.is_zero()) throw DivisionByZero();
  return RatFunc::normalize(f.den(), f.num());
}

RatFunc derive(const RatFunc& f) {
  if (f.is_polynomial()) return RatFunc(f.num().formal_derivative());
  const Poly& n = f.num();
  const Poly& d = f.den();
  return RatFunc::normalize(n.formal_derivative() * d - n * d.formal_derivative(), d * d);
}

RatFunc derive(const RatFunc& f, unsigned k) {
  RatFunc r = f;
  for (unsigned i = 0; i < k; ++i) r = derive(r);
  return r;
}

Rational eval(const RatFunc& f, const Rational& t0) {
  Rational d = f.den()(t0);
  if (d.is_zero()) throw PoleAtPoint(t0.str());
  return f.num()(t0) / d;
}

std::string poly_to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    Rational mag = negative ? -c : c;
    if (k == 0) {
      out += mag.str();
      continue;
    }
    if (!mag.is_one()) {
      out += mag.str();
      out += '*';
    }
    out += var;
    if (k > 1) {
      out += '^';
      out += std::to_string(k);
    }
  }
  return out;
}

namespace {

std::size_t term_count(const Poly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coeffs()) n += c.is_zero() ? 0 : 1;
  return n;
}

}  // namespace

std::string RatFunc::str() const {
  std::string n = poly_to_string(num_);
  if (den_.degree() == 0) return n;
  if (term_count(num_) > 1) n = "(" + n + ")";
  std::string d = poly_to_string(den_);
  if (term_count(den_) > 1) d = "(" + d + ")";
  return n + "/" + d;
}

namespace {

constexpr unsigned long kMaxExponent = 4096;

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  RatFunc parse() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ < s_.size()) fail(pos_, "unexpected trailing input");
    return v;
  }

 private:
  RatFunc expr() {
    RatFunc v = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  RatFunc term() {
    RatFunc v = factor();
    for (;;) {
      skip_ws();
      std::size_t at = pos_;
      if (accept('*')) {
        v = v * factor();
      } else if (accept('/')) {
        RatFunc d = factor();
        if (d.is_zero()) fail(at, "division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  RatFunc factor() {
    skip_ws();
    if (accept('-')) return -factor();
    RatFunc b = base();
    skip_ws();
    std::size_t caret = pos_;
    if (accept('^')) {
      skip_ws();
      auto e = integer();
      if (!e) fail(caret, "expected non-negative integer exponent after '^'");
      if (*e > kMaxExponent) fail(caret, "exponent too large");
      RatFunc r(1);
      for (unsigned long k = 0; k < e->get_ui(); ++k) r = r * b;
      return r;
    }
    return b;
  }

  RatFunc base() {
    skip_ws();
    if (pos_ >= s_.size()) fail(pos_, "unexpected end of input");
    if (accept('t')) return RatFunc::t();
    if (accept('(')) {
      std::size_t open = pos_ - 1;
      RatFunc v = expr();
      skip_ws();
      if (!accept(')')) fail(pos_ < s_.size() ? pos_ : open, "expected ')'");
      return v;
    }
    if (auto z = integer()) return RatFunc(Rational(std::move(*z)));
    fail(pos_, "expected 't', integer or '('");
  }

  std::optional<mpz_class> integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::size_t at, const std::string& message) const {
    std::string token = at < s_.size() ? std::string(1, s_[at]) : std::string("<end>");
    throw ParseError(1, at + 1, token, message);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace dfm
