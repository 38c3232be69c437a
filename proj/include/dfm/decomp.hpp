#pragma once

#include <optional>
#include <vector>

#include "dfm/linalg.hpp"
#include "dfm/wronski.hpp"

namespace dfm {

/// Monic, pairwise coprime factors whose product is the input. Each factor
/// is a power of a squarefree polynomial. This is weaker than a factorization
/// into irreducibles but is all the projector construction needs.
struct CoprimeFactorization {
  std::vector<PolyF> factors;
  PolyF product() const;
};

/// Partition of unity sum eps_i = 1 and the constant projectors E_i = eps_i(M).
struct ProjectorSet {
  std::vector<PolyF> epsilons;
  std::vector<MatK> projectors;
};

/// T^{-1} M T = diag(blocks) with constant invertible T.
struct BlockDecomposition {
  MatK T;
  MatK T_inv;
  std::vector<MatF> blocks;
  std::vector<PolyF> block_min_polys;
};

struct Decomposition {
  ProjectorSet projectors;
  BlockDecomposition blocks;
};

/// T^{-1} M T = diag(diagonal) with T constant.
struct KDiagonalization {
  MatK T;
  std::vector<RatFunc> diagonal;
};

/// n + max entry degree, the default bound for root search.
int default_root_bound(const MatF& m);

/// Squarefree decomposition of mu refined by splitting off every root in F
/// found within the degree bound.
CoprimeFactorization coprime_split(const PolyF& mu, int root_degree_bound);

/// eps_i = (a_i p_i) mod mu with p_i = mu / mu_i and a_i p_i + b_i mu_i = 1.
/// Throws NotCoprime if two factors share a root.
std::vector<PolyF> partition_of_unity(const std::vector<PolyF>& factors);

/// Block decomposition along the coprime split of the minimal polynomial.
/// Throws HypothesisViolated unless M M' = M' M. Every projector identity
/// and the block structure are verified exactly before returning.
Decomposition block_decompose(const MatF& m, std::optional<int> root_bound = std::nullopt);

/// Same, with a caller-supplied coprime factorization of the minimal polynomial.
Decomposition block_decompose_with_factors(const MatF& m, const std::vector<PolyF>& factors);

/// Roots in Q(t) of p whose numerator and denominator degrees are at most
/// degree_bound (linear factors are always solved). Every returned root is
/// verified by substitution; an empty result means "none found within bound".
std::vector<RatFunc> find_roots_in_F(const PolyF& p, int degree_bound);

/// Constant diagonalization; nullopt if the minimal polynomial is not
/// squarefree or does not split over F within the bound.
std::optional<KDiagonalization> k_diagonalize(const MatF& m,
                                              std::optional<int> root_bound = std::nullopt);

/// Type 1 witness M = sum m_i T E_ii T^{-1}, regrouped over a K-basis of the
/// diagonal entries.
std::optional<CanonicalDecomposition> type1_from_diagonalizable(
    const MatF& m, std::optional<int> root_bound = std::nullopt);

/// Exact rational roots of a univariate polynomial over Q, ascending.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace dfm
