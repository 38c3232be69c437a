#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dfm/errors.hpp"
#include "dfm/field.hpp"

namespace dfm {

/// Dense univariate polynomial over a field, coefficients stored lowest
/// power first. The leading coefficient is nonzero unless the polynomial is
/// zero, in which case the coefficient list is empty and degree() is -1
/// (standing in for -infinity).
template <Field C>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(C constant) {
    if (!detail::is_zero_of(constant)) c_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(C coeff, std::size_t power) {
    if (detail::is_zero_of(coeff)) return {};
    std::vector<C> c(power + 1);
    c[power] = std::move(coeff);
    return Polynomial(std::move(c));
  }
  static Polynomial variable() { return monomial(C(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == C(1); }

  const C& lead() const { return c_.back(); }
  C coeff(std::size_t k) const { return k < c_.size() ? c_[k] : C{}; }
  std::span<const C> coeffs() const { return c_; }

  Polynomial monic() const {
    if (c_.empty() || is_monic()) return *this;
    C inv = C(1) / c_.back();
    return *this * inv;
  }

  /// d/dx of the polynomial in its own variable (not the coefficient
  /// derivation).
  Polynomial formal_derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * C(static_cast<int>(k));
    return Polynomial(std::move(d));
  }

  /// Horner evaluation at a field element.
  C operator()(const C& x) const {
    C acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::is_zero_of(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const C& s) {
    if (detail::is_zero_of(s)) return {};
    Polynomial r = a;
    for (auto& x : r.c_) x = x * s;
    return r;
  }
  friend Polynomial operator*(const C& s, const Polynomial& a) { return a * s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && detail::is_zero_of(c_.back())) c_.pop_back();
  }

  std::vector<C> c_;
};

template <Field C>
bool is_zero(const Polynomial<C>& p) {
  return p.is_zero();
}

/// Euclidean division: a = q*b + r with deg r < deg b.
template <Field C>
std::pair<Polynomial<C>, Polynomial<C>> divmod(const Polynomial<C>& a, const Polynomial<C>& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {Polynomial<C>{}, a};
  std::vector<C> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<C> quo(rem.size() - db);
  const C inv_lead = C(1) / b.lead();
  const bool monic_divisor = b.lead() == C(1);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const C& top = rem[k + db];
    if (is_zero(top)) continue;
    C q = monic_divisor ? top : top * inv_lead;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - q * b.coeffs()[j];
    quo[k] = std::move(q);
  }
  rem.resize(db);
  return {Polynomial<C>(std::move(quo)), Polynomial<C>(std::move(rem))};
}

template <Field C>
Polynomial<C> operator%(const Polynomial<C>& a, const Polynomial<C>& b) {
  return divmod(a, b).second;
}

/// Exact quotient; throws if b does not divide a.
template <Field C>
Polynomial<C> exact_div(const Polynomial<C>& a, const Polynomial<C>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("polynomial division is not exact");
  return q;
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <Field C>
Polynomial<C> gcd(Polynomial<C> a, Polynomial<C> b) {
  while (!b.is_zero()) {
    Polynomial<C> r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

template <Field C>
struct ExtGcd {
  Polynomial<C> g;  ///< monic gcd
  Polynomial<C> u;
  Polynomial<C> v;  ///< u*a + v*b = g
};

/// Extended Euclid. Requires a and b not both zero.
template <Field C>
ExtGcd<C> ext_gcd(const Polynomial<C>& a, const Polynomial<C>& b) {
  if (a.is_zero() && b.is_zero()) throw Error("ext_gcd of two zero polynomials");
  Polynomial<C> r0 = a, r1 = b;
  Polynomial<C> s0(C(1)), s1;
  Polynomial<C> t0, t1(C(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial<C> s2 = s0 - q * s1;
    Polynomial<C> t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  C inv = C(1) / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Squarefree part p / gcd(p, p') (characteristic zero), made monic.
template <Field C>
Polynomial<C> squarefree_part(const Polynomial<C>& p) {
  if (p.degree() <= 0) return p.monic();
  return exact_div(p, gcd(p, p.formal_derivative())).monic();
}

/// Yun's squarefree decomposition of a monic polynomial: returns s_1, s_2,
/// ... with p = prod s_i^i, every s_i squarefree and monic, pairwise coprime.
/// Entries may be 1 for multiplicities that do not occur.
template <Field C>
std::vector<Polynomial<C>> squarefree_decomposition(const Polynomial<C>& p) {
  std::vector<Polynomial<C>> out;
  if (p.degree() <= 0) return out;
  Polynomial<C> a = p.monic();
  Polynomial<C> b = a.formal_derivative();
  Polynomial<C> c = gcd(a, b);
  Polynomial<C> w = exact_div(a, c);
  Polynomial<C> y = exact_div(b, c);
  Polynomial<C> z = y - w.formal_derivative();
  while (w.degree() > 0) {
    Polynomial<C> g = gcd(w, z);
    out.push_back(g);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - w.formal_derivative();
  }
  return out;
}

template <Field C>
Polynomial<C> power(const Polynomial<C>& p, unsigned e) {
  Polynomial<C> r(C(1));
  for (unsigned k = 0; k < e; ++k) r = r * p;
  return r;
}

}  // namespace dfm
