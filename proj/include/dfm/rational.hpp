#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "dfm/errors.hpp"

namespace dfm {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. This is the constant field K.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw ZeroDenominator();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpz_class num) : v_(std::move(num)) {}
  Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw ZeroDenominator();
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p" or "p/q" with arbitrary-precision integers.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& a) { return a.is_zero(); }
inline Rational inverse(const Rational& a) { return Rational(1) / a; }

// Rationals are the constants of the differential field.
inline Rational derive(const Rational&) { return Rational(); }
inline bool is_constant(const Rational&) { return true; }

inline Rational Rational::parse(std::string_view text) {
  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0) {
    throw Error("invalid rational literal '" + std::string(text) + "'");
  }
  if (v.get_den() == 0) throw ZeroDenominator();
  return Rational(std::move(v));
}

}  // namespace dfm
