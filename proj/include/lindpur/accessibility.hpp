#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lindpur/gkls.hpp"
#include "lindpur/linalg.hpp"

namespace lindpur {

/// Where a Lie-basis element came from: a generator, or a commutator of two
/// earlier elements.
struct LieProvenance {
  enum class Kind { Generator, Commutator };
  Kind kind = Kind::Generator;
  Index left = -1;   // generator index, or first basis index
  Index right = -1;  // second basis index for commutators
  int generation = 0;
};

/// Orthonormal real-span basis of the dynamical Lie algebra, with the
/// deterministic insertion order that produced it.
struct LieBasis {
  Index op_dim = 0;
  std::vector<RealVector> basis;  // realified, orthonormal, length 2 d^4 each
  std::vector<LieProvenance> generation_log;
  bool converged = true;  // false when max_dim stopped the sweep early

  Index dim() const { return static_cast<Index>(basis.size()); }
  SuperOperator element(Index i) const { return unrealify(basis.at(i), op_dim); }
};

/// Real span of the generators closed under iterated commutators.
///
/// Generators are normalized to unit Frobenius norm before insertion; a
/// candidate opens a new direction when its residual against the current
/// span exceeds tol (relative). Two structural invariants shared by every
/// generator -- hermiticity preservation and trace annihilation -- are
/// detected up front and re-imposed on every stored element, which keeps
/// rounding noise from accumulating into spurious directions along long
/// commutator chains. max_dim <= 0 means the ambient bound d^4.
LieBasis lie_closure(const std::vector<SuperOperator>& generators, double tol = 1e-8,
                     Index max_dim = 0);

/// The universal accessible pair: drift -i ad_{H0} + D_{|1><2|} with the
/// hopping chain H0 = sum_j |j><j+1| + h.c., and control -i ad_{|1><1|}.
struct AccessiblePair {
  GklsGenerator drift;
  GklsGenerator control;
};

AccessiblePair accessible_pair(Index d);

/// Dimension of the Lie closure of a spanning set of elementary generators
/// (-i ad over a Hermitian basis, plus dissipators of matrix units and their
/// pairwise +/i combinations): the algebra generated by arbitrary
/// Lindbladians. Equals d^4 - d^2 on every tested dimension.
Index full_gkls_dim(Index d, double tol = 1e-8);

/// Spanning verification on a quartet of levels: dissipators conjugated by
/// random unitaries supported on the quartet, together with -i ad_H over a
/// Hermitian basis of the quartet block, generate every paired elementary
/// dissipator on the quartet. Also decomposes a random Lindbladian on the
/// quartet over that family by least squares.
struct QuartetSpanReport {
  Index d = 0;
  std::vector<Index> quartet;
  int n_unitaries = 0;
  std::uint64_t seed = 0;
  Index span_dim = 0;
  double max_pair_residual = 0.0;        // worst Eq-basis operator residual
  double lindblad_reconstruction_error = 0.0;
  bool pass = false;
};

QuartetSpanReport quartet_span_check(Index d, int n_unitaries, std::uint64_t seed,
                                     std::vector<Index> quartet = {},
                                     double residual_tol = 1e-8);

/// Frobenius norm of  [-i ad_h, D_a] - (1/2) D_{a - i[h,a]} + (1/2) D_{a + i[h,a]}.
double commutation_identity_check(const Operator& h, const Operator& a);

}  // namespace lindpur
