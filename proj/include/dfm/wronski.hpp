#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dfm/linalg.hpp"

namespace dfm {

/// Result of a constant-independence scan.
struct IndependenceReport {
  std::size_t rank = 0;                    ///< r = dim_K span(inputs)
  std::vector<std::size_t> basis_indices;  ///< greedy basis, input order
  MatF certificate;                        ///< r x r Wronski matrix of the basis
  RatFunc wronskian;                       ///< det(certificate), nonzero when r > 0
};

/// M = sum_i basis[i] * constants[i] with K-independent basis functions and
/// constant matrices.
struct CanonicalDecomposition {
  std::vector<RatFunc> basis;
  std::vector<MatK> constants;

  std::size_t rank() const { return basis.size(); }
  MatF reconstruct(std::size_t n) const;
  /// True iff the constant matrices commute pairwise.
  bool constants_commute() const;
};

/// Y[i][j] = (fs[j])^(i) for i < rows.
MatF wronski_matrix(std::span<const RatFunc> fs, std::size_t rows);

/// Greedy basis over K: a candidate joins iff the square Wronski matrix of
/// basis + candidate is nonsingular.
IndependenceReport constant_rank(std::span<const RatFunc> fs);

/// Coordinates c in K^r with f = sum c_i basis_i, found by solving the
/// Wronski system. `basis` must be K-independent. Throws NotInSpan.
std::vector<Rational> constant_coordinates(const RatFunc& f, std::span<const RatFunc> basis);

/// f scaled by a nonzero constant so that its numerator is monic.
RatFunc monic_representative(const RatFunc& f);

/// Expands the entries of M over a K-basis chosen greedily in row-major
/// order. Basis functions are reported as monic representatives.
CanonicalDecomposition canonical_decomposition(const MatF& m);

}  // namespace dfm
