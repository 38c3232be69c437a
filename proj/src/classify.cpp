#include "dfm/classify.hpp"

#include <random>

namespace dfm {

bool commutes_with_derivative(const MatF& m) {
  if (!m.is_square()) throw DimensionMismatch("c1 check on " + m.shape());
  return commutator(m, derive(m)).is_zero();
}

bool derivatives_pairwise_commute(const MatF& m, unsigned order) {
  if (order < 1) throw Error("derivatives_pairwise_commute: order must be >= 1");
  std::vector<MatF> d{m};
  for (unsigned k = 1; k <= order; ++k) d.push_back(derive(d.back()));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      if (!commutator(d[i], d[j]).is_zero()) return false;
  return true;
}

std::optional<CanonicalDecomposition> is_type1(const MatF& m) {
  CanonicalDecomposition dec = canonical_decomposition(m);
  if (!dec.constants_commute()) return std::nullopt;
  return dec;
}

VecF canonical_direction(const VecF& v) {
  Poly den_lcm(Rational(1));
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    den_lcm = exact_div(den_lcm * x.den(), gcd(den_lcm, x.den()));
  }
  Poly num_gcd;
  VecF out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * RatFunc(den_lcm);
    if (!out[i].is_zero()) num_gcd = gcd(num_gcd, out[i].num());
  }
  if (num_gcd.is_zero()) return out;
  RatFunc scale = inverse(RatFunc(num_gcd));
  for (auto& x : out) x = x * scale;
  for (const auto& x : out) {
    if (x.is_zero()) continue;
    RatFunc s(inverse(x.num().lead()));
    for (auto& y : out) y = y * s;
    break;
  }
  return out;
}

namespace {

bool verify_type2(const MatF& m, const VecF& f, const VecF& g) {
  if (outer(f, g) != m) return false;
  if (!dot(f, g).is_zero()) return false;
  VecF gp(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) gp[i] = derive(g[i]);
  return dot(f, gp).is_zero();
}

}  // namespace

std::optional<Type2Witness> is_type2(const MatF& m) {
  if (!m.is_square()) throw DimensionMismatch("type 2 check on " + m.shape());
  if (rank(m) != 1) return std::nullopt;
  if (!(m * m).is_zero()) return std::nullopt;
  if (!commutes_with_derivative(m)) return std::nullopt;

  const std::size_t n = m.rows();
  std::size_t col = 0;
  while (col < n && m.col(col) == VecF(n)) ++col;
  VecF f = canonical_direction(m.col(col));
  std::size_t pivot = 0;
  while (f[pivot].is_zero()) ++pivot;
  VecF g(n);
  for (std::size_t j = 0; j < n; ++j) g[j] = m(pivot, j) / f[pivot];

  // Holds for every rank-one nilpotent M with M M' = M' M.
  if (!verify_type2(m, f, g)) throw InternalContradiction("type 2 witness failed verification");
  return Type2Witness{std::move(f), std::move(g)};
}

std::optional<Type3Witness> is_type3(const MatF& m) {
  if (!m.is_square()) throw DimensionMismatch("type 3 check on " + m.shape());
  const std::size_t n = m.rows();
  if (n == 0) return std::nullopt;
  RatFunc h = m.trace() / RatFunc(static_cast<int>(n));
  if (h.is_zero()) return std::nullopt;
  MatF rest = m - h * MatF::identity(n);
  auto w = is_type2(rest);
  if (!w) return std::nullopt;
  return Type3Witness{std::move(h), std::move(w->f), std::move(w->g)};
}

TypeReport classify(const MatF& m) {
  if (!m.is_square()) throw DimensionMismatch("classify " + m.shape());
  TypeReport rep;
  rep.n = m.rows();
  rep.commutes_c1 = commutes_with_derivative(m);
  rep.minimal_polynomial = minimal_polynomial(m);
  rep.nonderogatory = rep.minimal_polynomial.degree() == static_cast<int>(rep.n);
  rep.nilpotent = true;
  for (int k = 0; k < rep.minimal_polynomial.degree(); ++k)
    if (!rep.minimal_polynomial.coeffs()[static_cast<std::size_t>(k)].is_zero()) rep.nilpotent = false;
  rep.rank_over_F = rank(m);
  rep.type1 = is_type1(m);
  rep.type2 = is_type2(m);
  rep.type3 = is_type3(m);
  return rep;
}

MatF make_type2(const VecF& f, std::uint64_t seed) {
  const std::size_t n = f.size();
  bool all_zero = true;
  for (const auto& x : f) all_zero = all_zero && x.is_zero();
  if (all_zero) throw NoWitness("f is zero");

  MatF ft(2, n);
  for (std::size_t j = 0; j < n; ++j) {
    ft(0, j) = f[j];
    ft(1, j) = derive(f[j]);
  }
  auto rn = rank_and_nullspace(ft);
  if (rn.nullspace.empty()) throw NoWitness("[f, f'] has full column rank");

  std::mt19937_64 rng(seed);
  std::vector<long> coef(rn.nullspace.size());
  bool nonzero = false;
  while (!nonzero) {
    for (auto& c : coef) {
      c = static_cast<long>(rng() % 7) - 3;
      nonzero = nonzero || c != 0;
    }
  }
  VecF g(n);
  for (std::size_t k = 0; k < coef.size(); ++k) {
    if (coef[k] == 0) continue;
    RatFunc c(Rational(coef[k]));
    for (std::size_t i = 0; i < n; ++i) g[i] = g[i] + c * rn.nullspace[k][i];
  }
  g = canonical_direction(g);

  MatF m = outer(f, g);
  if (!verify_type2(m, f, g) || !(m * m).is_zero() || !commutes_with_derivative(m)) {
    throw InternalContradiction("constructed type 2 matrix failed verification");
  }
  return m;
}

bool idempotent_constancy_check(const MatF& n) {
  if (!n.is_square() || n * n != n) throw NotIdempotent();
  const bool commutes = commutes_with_derivative(n);
  if (commutes && !derive(n).is_zero()) {
    throw InternalContradiction("idempotent commuting with its derivative is not constant");
  }
  return commutes;
}

}  // namespace dfm
