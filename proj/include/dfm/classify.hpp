#pragma once

#include <cstdint>
#include <optional>

#include "dfm/linalg.hpp"
#include "dfm/wronski.hpp"

namespace dfm {

/// M = f g^T with f^T g = f^T g' = 0.
struct Type2Witness {
  VecF f;
  VecF g;
};

/// M = h I + f g^T with f g^T of type 2 and h != 0.
struct Type3Witness {
  RatFunc h;
  VecF f;
  VecF g;
};

/// Classification of M with constructive witnesses. The type fields are
/// filled independently; a matrix may be of several types or of none.
struct TypeReport {
  std::size_t n = 0;
  bool commutes_c1 = false;
  std::optional<CanonicalDecomposition> type1;
  std::optional<Type2Witness> type2;
  std::optional<Type3Witness> type3;
  bool nonderogatory = false;
  bool nilpotent = false;
  std::size_t rank_over_F = 0;
  PolyF minimal_polynomial;
};

/// M M' = M' M.
bool commutes_with_derivative(const MatF& m);

/// All pairs among M, M', ..., M^(order) commute.
bool derivatives_pairwise_commute(const MatF& m, unsigned order);

/// The canonical decomposition of M when its constants commute pairwise.
/// This is exact: M is of type 1 iff the canonical constants commute.
/// The zero matrix is of type 1 (empty sum).
std::optional<CanonicalDecomposition> is_type1(const MatF& m);

/// Witness iff rank_F(M) = 1, M^2 = 0 and M M' = M' M. The witness is
/// verified (M = f g^T, f^T g = 0, f^T g' = 0) before it is returned.
std::optional<Type2Witness> is_type2(const MatF& m);

/// h = trace(M)/n; witness iff h != 0 and M - h I is of type 2.
/// With h = 0 the matrix is reported as type 2 only.
std::optional<Type3Witness> is_type3(const MatF& m);

TypeReport classify(const MatF& m);

/// f g^T for a seed-chosen nonzero g in the nullspace of [f, f']^T. Throws
/// NoWitness if f = 0 or the nullspace is trivial.
MatF make_type2(const VecF& f, std::uint64_t seed);

/// For an idempotent N, returns whether N N' = N' N. A true result implies N
/// is constant; that implication is checked and a violation raises
/// InternalContradiction. Throws NotIdempotent if N^2 != N.
bool idempotent_constancy_check(const MatF& n);

/// v scaled by an element of F so that its entries are coprime polynomials
/// and the first nonzero entry has a monic numerator.
VecF canonical_direction(const VecF& v);

}  // namespace dfm
