#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "dfm/polynomial.hpp"
#include "dfm/rational.hpp"

namespace dfm {

/// Polynomial in t over Q.
using Poly = Polynomial<Rational>;

/// Element of the differential field F = Q(t) with derivation d/dt.
///
/// Always stored in canonical form: gcd(num, den) = 1 and den monic, so two
/// values are equal iff their representations are equal. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(int c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT
  RatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Rational(1)) {}

  /// Canonical form of num/den. Throws ZeroDenominator if den = 0.
  static RatFunc normalize(Poly num, Poly den);
  /// The field generator t.
  static RatFunc t() { return RatFunc(Poly::variable()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Constant iff the canonical form has deg num <= 0 and den = 1.
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Value of a constant; throws if non-constant.
  Rational constant_value() const;

  /// max(deg num, deg den)
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  /// Serialization in the expression grammar, e.g. "(t^2+1)/(t-1)".
  std::string str() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  RatFunc(Poly num, Poly den, int /*canonical tag*/)
      : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline bool is_constant(const RatFunc& f) { return f.is_constant(); }

/// Multiplicative inverse; throws DivisionByZero for 0.
RatFunc inverse(const RatFunc& f);

/// d/dt by the quotient rule.
RatFunc derive(const RatFunc& f);

/// k-th derivative.
RatFunc derive(const RatFunc& f, unsigned k);

/// Exact value f(t0); throws PoleAtPoint if the denominator vanishes there.
Rational eval(const RatFunc& f, const Rational& t0);

/// Poly pretty-printer in the expression grammar, variable name configurable.
std::string poly_to_string(const Poly& p, std::string_view var = "t");

/// Parses an expression per the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | base ('^' nonneg-integer)?
///   base   := 't' | integer | '(' expr ')'
/// Throws ParseError carrying the 1-based column and offending token.
RatFunc parse_ratfunc(std::string_view text);

}  // namespace dfm
