#include "dfm/decomp.hpp"

#include <algorithm>

#include "dfm/classify.hpp"

namespace dfm {

PolyF CoprimeFactorization::product() const {
  PolyF p(RatFunc(1));
  for (const auto& f : factors) p = p * f;
  return p;
}

int default_root_bound(const MatF& m) {
  int deg = 0;
  for (const auto& x : m.data()) deg = std::max(deg, x.degree());
  return static_cast<int>(m.rows()) + deg;
}

// ---------------------------------------------------------------------------
// Rational roots of univariate polynomials over Q.

namespace {

int sign_at(const Poly& p, const Rational& x) { return p(x).sign(); }

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, p.formal_derivative()};
  while (!chain.back().is_zero()) {
    Poly r = -(chain[chain.size() - 2] % chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Number of distinct real roots in (a, b].
int roots_in(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.value().get_num_mpz_t(), x.value().get_den_mpz_t());
  return Rational(q);
}

// Rational with the smallest denominator in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  Rational fl = floor_of(lo);
  if (fl == lo) return lo;
  if (fl + Rational(1) <= hi) return fl + Rational(1);
  return fl + inverse(simplest_between(inverse(hi - fl), inverse(lo - fl)));
}

}  // namespace

std::vector<Rational> rational_roots(const Poly& p) {
  Poly q = squarefree_part(p);
  if (q.degree() < 1) return {};

  // Denominator bound: leading coefficient of the primitive integer multiple.
  mpz_class den_lcm = 1;
  for (const auto& c : q.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.value().get_den_mpz_t());
  mpz_class content = 0;
  for (const auto& c : q.coeffs()) {
    mpz_class a = c.value().get_num() * (den_lcm / c.value().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), a.get_mpz_t());
  }
  Rational den_bound(mpz_class(den_lcm / content));
  Rational sep = inverse(den_bound * den_bound);

  Rational bound(1);
  for (int k = 0; k < q.degree(); ++k) {
    Rational a = q.coeffs()[static_cast<std::size_t>(k)];
    if (a.sign() < 0) a = -a;
    if (a + Rational(1) > bound) bound = a + Rational(1);
  }

  auto chain = sturm_chain(q);
  std::vector<std::pair<Rational, Rational>> isolated;
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int c = roots_in(chain, a, b);
    if (c == 0) continue;
    if (c == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    Rational mid = (a + b) / Rational(2);
    work.emplace_back(a, mid);
    work.emplace_back(mid, b);
  }

  std::vector<Rational> roots;
  for (auto [a, b] : isolated) {
    if (q(b).is_zero()) {
      roots.push_back(b);
      continue;
    }
    bool exact = false;
    while (b - a >= sep) {
      Rational mid = (a + b) / Rational(2);
      if (q(mid).is_zero()) {
        roots.push_back(mid);
        exact = true;
        break;
      }
      if (roots_in(chain, a, mid) == 1) {
        b = mid;
      } else {
        a = mid;
      }
    }
    if (exact) continue;
    Rational s = simplest_between(a, b);
    if (s > a && s <= b && q(s).is_zero()) roots.push_back(s);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Roots in F = Q(t).

namespace {

using Series = std::vector<Rational>;  // truncated power series in s = t - t0

Series series_mul(const Series& a, const Series& b) {
  const std::size_t n = a.size();
  Series r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series series_inverse(const Series& a) {
  const std::size_t n = a.size();
  Series b(n);
  Rational inv0 = inverse(a[0]);
  b[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational s;
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * b[k - j];
    b[k] = -(s * inv0);
  }
  return b;
}

// Horner evaluation of sum_k coeffs[k] * x^k with series arithmetic.
Series series_eval(const std::vector<Series>& coeffs, const Series& x) {
  Series acc(x.size());
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = series_mul(acc, x);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += coeffs[k][i];
  }
  return acc;
}

// p(s + a)
Poly taylor_shift(const Poly& p, const Rational& a) {
  Poly lin(std::vector<Rational>{a, Rational(1)});
  Poly acc;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * lin + Poly(p.coeffs()[k]);
  return acc;
}

Series to_series(const Poly& p, std::size_t n) {
  Series s(n);
  for (std::size_t k = 0; k < n && k < p.coeffs().size(); ++k) s[k] = p.coeffs()[k];
  return s;
}

// num/den with deg num, deg den <= bound and num = den * s mod x^n.
std::optional<std::pair<Poly, Poly>> pade(const Series& s, int bound) {
  const std::size_t n = s.size();
  Poly r0 = Poly::monomial(Rational(1), n);
  Poly r1(s);
  Poly t0;
  Poly t1(Rational(1));
  while (r1.degree() > bound) {
    auto [q, r] = divmod(r0, r1);
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1.degree() > bound || t1.coeff(0).is_zero()) return std::nullopt;
  return std::make_pair(std::move(r1), std::move(t1));
}

constexpr int kMaxSamplePoints = 256;

}  // namespace

std::vector<RatFunc> find_roots_in_F(const PolyF& p, int degree_bound) {
  if (p.degree() < 1) return {};
  const PolyF q = squarefree_part(p);
  if (q.degree() == 1) return {-q.coeff(0)};
  const int bound = std::max(degree_bound, 0);

  // Clear denominators: q * D has coefficients in Q[t] and leading coefficient D.
  Poly d(Rational(1));
  for (const auto& c : q.coeffs()) d = exact_div(d * c.den(), gcd(d, c.den()));
  std::vector<Poly> cleared;
  for (const auto& c : q.coeffs()) cleared.push_back((c * RatFunc(d)).num());

  const std::size_t terms = static_cast<std::size_t>(2 * bound + 2);
  for (int point = 1; point <= kMaxSamplePoints; ++point) {
    const Rational t0(point);
    if (d(t0).is_zero()) continue;
    std::vector<Rational> at_t0;
    for (const auto& c : cleared) at_t0.push_back(c(t0));
    Poly u(at_t0);
    if (gcd(u, u.formal_derivative()).degree() > 0) continue;

    // Expand every coefficient around t0.
    std::vector<Series> pc, dpc;
    for (const auto& c : cleared) pc.push_back(to_series(taylor_shift(c, t0), terms));
    for (std::size_t k = 1; k < pc.size(); ++k) {
      Series s = pc[k];
      for (auto& x : s) x *= Rational(static_cast<long>(k));
      dpc.push_back(std::move(s));
    }

    std::vector<RatFunc> roots;
    for (const auto& x0 : rational_roots(u)) {
      // Newton lifting of the simple root x0 to a power series root.
      Series rho(terms);
      rho[0] = x0;
      for (std::size_t prec = 1; prec < terms * 2; prec *= 2) {
        Series val = series_eval(pc, rho);
        Series der = series_eval(dpc, rho);
        Series step = series_mul(val, series_inverse(der));
        for (std::size_t i = 0; i < terms; ++i) rho[i] -= step[i];
      }
      auto pq = pade(rho, bound);
      if (!pq) continue;
      RatFunc cand = RatFunc::normalize(taylor_shift(pq->first, -t0), taylor_shift(pq->second, -t0));
      if (!p(cand).is_zero()) continue;
      if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
    }
    return roots;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Projectors and blocks.

CoprimeFactorization coprime_split(const PolyF& mu, int root_degree_bound) {
  if (mu.degree() < 1) throw Error("coprime_split: degree must be >= 1");
  CoprimeFactorization out;
  const auto parts = squarefree_decomposition(mu);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const unsigned mult = static_cast<unsigned>(i + 1);
    PolyF rest = parts[i];
    if (rest.degree() < 1) continue;
    for (const auto& rho : find_roots_in_F(rest, root_degree_bound)) {
      PolyF lin(std::vector<RatFunc>{-rho, RatFunc(1)});
      rest = exact_div(rest, lin);
      out.factors.push_back(power(lin, mult));
    }
    if (rest.degree() > 0) out.factors.push_back(power(rest, mult));
  }
  if (out.product() != mu.monic()) throw InternalContradiction("coprime split does not reproduce its input");
  return out;
}

std::vector<PolyF> partition_of_unity(const std::vector<PolyF>& factors) {
  if (factors.empty()) throw Error("partition_of_unity: no factors");
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (gcd(factors[i], factors[j]).degree() > 0) throw NotCoprime();

  PolyF mu(RatFunc(1));
  for (const auto& f : factors) mu = mu * f;
  std::vector<PolyF> eps;
  PolyF total;
  for (const auto& f : factors) {
    PolyF p = exact_div(mu, f);
    auto bez = ext_gcd(p, f);
    if (bez.g.degree() != 0) throw NotCoprime();
    eps.push_back((bez.u * p) % mu);
    total = total + eps.back();
  }
  if (total != PolyF(RatFunc(1))) throw InternalContradiction("partition of unity does not sum to 1");
  return eps;
}

Decomposition block_decompose_with_factors(const MatF& m, const std::vector<PolyF>& factors) {
  if (!m.is_square()) throw DimensionMismatch("block_decompose " + m.shape());
  if (!commutes_with_derivative(m)) throw HypothesisViolated("M M' != M' M (c1)");
  const std::size_t n = m.rows();

  PolyF mu = minimal_polynomial(m);
  PolyF prod(RatFunc(1));
  for (const auto& f : factors) prod = prod * f;
  if (prod != mu) throw Error("block_decompose: factors do not multiply to the minimal polynomial");

  Decomposition out;
  out.projectors.epsilons = partition_of_unity(factors);
  for (const auto& e : out.projectors.epsilons) {
    MatF proj = eval_at_matrix(e, m);
    // A polynomial in M is idempotent and commutes with its derivative, hence constant.
    if (!is_constant(proj)) throw InternalContradiction("projector is not constant");
    out.projectors.projectors.push_back(to_matk(proj));
  }

  const auto& es = out.projectors.projectors;
  MatK sum(n, n);
  for (std::size_t i = 0; i < es.size(); ++i) {
    sum = sum + es[i];
    if (es[i] * es[i] != es[i]) throw InternalContradiction("projector not idempotent");
    for (std::size_t j = 0; j < es.size(); ++j)
      if (i != j && !(es[i] * es[j]).is_zero()) throw InternalContradiction("projectors not orthogonal");
  }
  if (sum != MatK::identity(n)) throw InternalContradiction("projectors do not sum to I");

  // Columns of T: bases of the ranges of the E_i.
  MatK t(n, n);
  std::vector<std::size_t> sizes;
  std::size_t col = 0;
  for (const auto& e : es) {
    auto basis = independent_columns(e);
    sizes.push_back(basis.size());
    for (auto c : basis) {
      if (col >= n) throw InternalContradiction("ranges of projectors exceed dimension");
      for (std::size_t i = 0; i < n; ++i) t(i, col) = e(i, c);
      ++col;
    }
  }
  if (col != n) throw InternalContradiction("ranges of projectors do not span K^n");
  auto t_inv = inverse(t);
  if (!t_inv) throw InternalContradiction("similarity is singular");

  MatF b = to_matf(*t_inv) * m * to_matf(t);
  std::size_t at = 0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const std::size_t sz = sizes[k];
    for (std::size_t i = at; i < at + sz; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((j < at || j >= at + sz) && !b(i, j).is_zero())
          throw InternalContradiction("similarity is not block diagonal");
    MatF blk = b.block(at, at, sz, sz);
    if (!eval_at_matrix(factors[k], blk).is_zero()) throw InternalContradiction("block not annihilated");
    if (minimal_polynomial(blk) != factors[k]) throw InternalContradiction("block minimal polynomial differs");
    out.blocks.blocks.push_back(std::move(blk));
    out.blocks.block_min_polys.push_back(factors[k]);
    at += sz;
  }
  out.blocks.T = std::move(t);
  out.blocks.T_inv = std::move(*t_inv);
  return out;
}

Decomposition block_decompose(const MatF& m, std::optional<int> root_bound) {
  if (!m.is_square()) throw DimensionMismatch("block_decompose " + m.shape());
  if (!commutes_with_derivative(m)) throw HypothesisViolated("M M' != M' M (c1)");
  const int bound = root_bound.value_or(default_root_bound(m));
  auto split = coprime_split(minimal_polynomial(m), bound);
  return block_decompose_with_factors(m, split.factors);
}

std::optional<KDiagonalization> k_diagonalize(const MatF& m, std::optional<int> root_bound) {
  if (!m.is_square()) throw DimensionMismatch("k_diagonalize " + m.shape());
  if (!commutes_with_derivative(m)) throw HypothesisViolated("M M' != M' M (c1)");
  const int bound = root_bound.value_or(default_root_bound(m));
  PolyF mu = minimal_polynomial(m);
  if (gcd(mu, mu.formal_derivative()).degree() > 0) return std::nullopt;
  auto roots = find_roots_in_F(mu, bound);
  if (static_cast<int>(roots.size()) != mu.degree()) return std::nullopt;

  std::vector<PolyF> factors;
  for (const auto& rho : roots) factors.emplace_back(std::vector<RatFunc>{-rho, RatFunc(1)});
  Decomposition dec = block_decompose_with_factors(m, factors);

  KDiagonalization out;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const MatF& blk = dec.blocks.blocks[k];
    if (blk != roots[k] * MatF::identity(blk.rows())) throw InternalContradiction("block is not scalar");
    for (std::size_t i = 0; i < blk.rows(); ++i) out.diagonal.push_back(roots[k]);
  }
  out.T = std::move(dec.blocks.T);
  return out;
}

std::optional<CanonicalDecomposition> type1_from_diagonalizable(const MatF& m,
                                                                std::optional<int> root_bound) {
  auto diag = k_diagonalize(m, root_bound);
  if (!diag) return std::nullopt;
  const std::size_t n = m.rows();
  auto t_inv = inverse(diag->T);
  if (!t_inv) throw InternalContradiction("similarity is singular");

  // Rank-one projectors P_i = T e_i e_i^T T^{-1}.
  std::vector<MatK> proj;
  for (std::size_t i = 0; i < n; ++i) {
    MatK p(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) p(a, b) = diag->T(a, i) * (*t_inv)(i, b);
    proj.push_back(std::move(p));
  }

  // Regroup over a K-basis of the diagonal entries so the coefficients are independent.
  auto rep = constant_rank(diag->diagonal);
  CanonicalDecomposition out;
  for (auto idx : rep.basis_indices) out.basis.push_back(monic_representative(diag->diagonal[idx]));
  out.constants.assign(out.basis.size(), MatK(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    if (diag->diagonal[i].is_zero()) continue;
    auto c = constant_coordinates(diag->diagonal[i], out.basis);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) out.constants[k] = out.constants[k] + c[k] * proj[i];
  }
  if (out.reconstruct(n) != m) throw InternalContradiction("diagonal witness does not reconstruct M");
  if (!out.constants_commute()) throw InternalContradiction("diagonal witness constants do not commute");
  return out;
}

}  // namespace dfm
