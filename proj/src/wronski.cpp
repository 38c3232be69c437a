#include "dfm/wronski.hpp"

#include "dfm/elimination.hpp"

namespace dfm {

namespace {

// The family D f_1, ..., D f_m for D = lcm of the denominators, with
// derivatives cached. W(D f) = D^k W(f) and constant relations are the same
// for both families, so eliminations run on polynomial entries, which keeps
// the gcd work in normalization small.
class ScaledFamily {
 public:
  explicit ScaledFamily(std::span<const RatFunc> fs) {
    d_ = Poly(Rational(1));
    for (const auto& f : fs) d_ = exact_div(d_ * f.den(), gcd(d_, f.den()));
    for (const auto& f : fs) cols_.push_back({RatFunc(f.num() * exact_div(d_, f.den()))});
  }

  const Poly& scale() const { return d_; }

  const RatFunc& at(std::size_t j, std::size_t i) {
    auto& c = cols_[j];
    while (c.size() <= i) c.push_back(derive(c.back()));
    return c[i];
  }

  MatF wronski(std::span<const std::size_t> cols, std::size_t rows) {
    MatF y(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) y(i, j) = at(cols[j], i);
    return y;
  }

  VecF derivatives(std::size_t j, std::size_t rows) {
    VecF v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = at(j, i);
    return v;
  }

 private:
  Poly d_;
  std::vector<std::vector<RatFunc>> cols_;
};

// Greedy basis: a candidate joins iff the square Wronski matrix of the
// basis plus the candidate is nonsingular.
std::vector<std::size_t> greedy_basis(std::span<const RatFunc> fs, ScaledFamily& fam) {
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_zero()) continue;
    basis.push_back(i);
    if (determinant(fam.wronski(basis, basis.size())).is_zero()) basis.pop_back();
  }
  return basis;
}

}  // namespace

MatF wronski_matrix(std::span<const RatFunc> fs, std::size_t rows) {
  MatF y(rows, fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j) {
    RatFunc d = fs[j];
    for (std::size_t i = 0; i < rows; ++i) {
      y(i, j) = d;
      if (i + 1 < rows) d = derive(d);
    }
  }
  return y;
}

IndependenceReport constant_rank(std::span<const RatFunc> fs) {
  ScaledFamily fam(fs);
  IndependenceReport rep;
  rep.basis_indices = greedy_basis(fs, fam);
  rep.rank = rep.basis_indices.size();
  rep.wronskian = RatFunc(1);
  if (rep.rank > 0) {
    std::vector<RatFunc> b;
    for (auto i : rep.basis_indices) b.push_back(fs[i]);
    rep.certificate = wronski_matrix(b, b.size());
    rep.wronskian = determinant(fam.wronski(rep.basis_indices, rep.rank)) /
                    RatFunc(power(fam.scale(), static_cast<unsigned>(rep.rank)));
  }
  return rep;
}

std::vector<Rational> constant_coordinates(const RatFunc& f, std::span<const RatFunc> basis) {
  const std::size_t r = basis.size();
  if (r == 0) {
    if (!f.is_zero()) throw NotInSpan();
    return {};
  }
  std::vector<RatFunc> all(basis.begin(), basis.end());
  all.push_back(f);
  ScaledFamily fam(all);
  std::vector<std::size_t> cols(r);
  for (std::size_t i = 0; i < r; ++i) cols[i] = i;
  auto sol = solve(fam.wronski(cols, r), fam.derivatives(r, r));
  if (!sol) throw Error("constant_coordinates: basis is not K-independent");
  std::vector<Rational> c;
  c.reserve(r);
  for (const auto& x : *sol) {
    if (!x.is_constant()) throw NotInSpan();
    c.push_back(x.constant_value());
  }
  return c;
}

RatFunc monic_representative(const RatFunc& f) {
  if (f.is_zero()) return f;
  return f * RatFunc(inverse(f.num().lead()));
}

MatF CanonicalDecomposition::reconstruct(std::size_t n) const {
  MatF m(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) m = m + basis[k] * to_matf(constants[k]);
  return m;
}

bool CanonicalDecomposition::constants_commute() const {
  for (std::size_t i = 0; i < constants.size(); ++i)
    for (std::size_t j = i + 1; j < constants.size(); ++j)
      if (!commutator(constants[i], constants[j]).is_zero()) return false;
  return true;
}

CanonicalDecomposition canonical_decomposition(const MatF& m) {
  if (!m.is_square()) throw DimensionMismatch("canonical decomposition of " + m.shape());
  const std::size_t n = m.rows();
  const auto& entries = m.data();
  ScaledFamily fam(entries);
  const std::vector<std::size_t> basis = greedy_basis(entries, fam);
  const std::size_t r = basis.size();

  CanonicalDecomposition out;
  std::vector<Rational> lead(r);
  for (std::size_t k = 0; k < r; ++k) {
    out.basis.push_back(monic_representative(entries[basis[k]]));
    lead[k] = entries[basis[k]].num().lead();  // entry = lead * monic representative
  }
  out.constants.assign(r, MatK(n, n));
  if (r == 0) return out;

  // One inverse of the Wronski matrix serves every entry.
  auto y_inv = inverse(fam.wronski(basis, r));
  if (!y_inv) throw InternalContradiction("Wronski matrix of a certified basis is singular");

  for (std::size_t e = 0; e < entries.size(); ++e) {
    if (entries[e].is_zero()) continue;
    VecF c = mat_vec(*y_inv, fam.derivatives(e, r));
    for (std::size_t k = 0; k < r; ++k) {
      if (!c[k].is_constant()) throw InternalContradiction("entry outside the constant span of the entry basis");
      out.constants[k](e / n, e % n) = c[k].constant_value() * lead[k];
    }
  }
  return out;
}

}  // namespace dfm
