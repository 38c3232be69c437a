#pragma once

#include <string>
#include <vector>

#include "dfm/elimination.hpp"
#include "dfm/matrix.hpp"
#include "dfm/polynomial.hpp"
#include "dfm/ratfunc.hpp"

namespace dfm {

/// Matrix over F = Q(t).
using MatF = Matrix<RatFunc>;
/// Matrix over the constants K = Q.
using MatK = Matrix<Rational>;
/// Polynomial in lambda over F.
using PolyF = Polynomial<RatFunc>;
/// Column vector over F.
using VecF = std::vector<RatFunc>;

/// p(M) by Horner's rule.
template <Field F>
Matrix<F> eval_at_matrix(const Polynomial<F>& p, const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionMismatch("polynomial of non-square " + m.shape());
  const std::size_t n = m.rows();
  Matrix<F> acc(n, n);
  const auto c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = acc(i, i) + c[k];
  }
  return acc;
}

/// Monic polynomial of least degree annihilating M, found as the first
/// linear dependence among vec(I), vec(M), vec(M^2), ...
template <Field F>
Polynomial<F> minimal_polynomial(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionMismatch("minimal polynomial of " + m.shape());
  const std::size_t n = m.rows();
  std::vector<Matrix<F>> powers{Matrix<F>::identity(n)};
  for (std::size_t k = 1; k <= n; ++k) {
    powers.push_back(powers.back() * m);
    Matrix<F> krylov(n * n, k + 1);
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t e = 0; e < n * n; ++e) krylov(e, j) = powers[j].data()[e];
    auto rn = rank_and_nullspace(krylov);
    if (!rn.nullspace.empty()) {
      // I..M^(k-1) are independent, so the single free column is k and its
      // coefficient is already 1.
      return Polynomial<F>(std::move(rn.nullspace.front()));
    }
  }
  throw InternalContradiction("no dependence among the first n+1 powers");
}

/// det(lambda I - M) by the Faddeev-LeVerrier recurrence (characteristic 0).
template <Field F>
Polynomial<F> char_polynomial(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionMismatch("characteristic polynomial of " + m.shape());
  const std::size_t n = m.rows();
  std::vector<F> c(n + 1);
  c[n] = F(1);
  Matrix<F> mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) = mk(i, i) + c[n - k + 1];
    F tr = (m * mk).trace();
    c[n - k] = -(tr / F(static_cast<int>(k)));
  }
  return Polynomial<F>(std::move(c));
}

template <Field F>
bool is_nonderogatory(const Matrix<F>& m) {
  return minimal_polynomial(m).degree() == static_cast<int>(m.rows());
}

/// True iff M^k = 0 for some k, i.e. the minimal polynomial is lambda^k.
template <Field F>
bool is_nilpotent(const Matrix<F>& m) {
  auto mu = minimal_polynomial(m);
  for (int k = 0; k < mu.degree(); ++k)
    if (!is_zero(mu.coeffs()[static_cast<std::size_t>(k)])) return false;
  return true;
}

/// Bezout data g = u a + v b with g the monic gcd.
ExtGcd<RatFunc> polyf_ext_gcd(const PolyF& a, const PolyF& b);

/// Pretty-prints a polynomial in lambda with rational-function coefficients.
std::string polyf_to_string(const PolyF& p, const std::string& var = "lambda");

/// Lifts a constant matrix into F.
MatF to_matf(const MatK& m);
/// Converts a matrix with constant entries to K; throws if an entry is not constant.
MatK to_matk(const MatF& m);

}  // namespace dfm
