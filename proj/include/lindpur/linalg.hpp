#pragma once

#include <functional>
#include <vector>

#include "lindpur/types.hpp"

namespace lindpur {

// Conventions used throughout:
//   * vec stacks columns left to right, so vec(A X B) = (B^T kron A) vec(X).
//   * Tensor products put the system first and the auxiliary factor second:
//     composite row index = row(a) * dim(b) + row(b).

/// Tensor (Kronecker) product; dims multiply.
Operator kron(const Operator& a, const Operator& b);

/// Column-stacking vectorization.
Vector vec(const Operator& x);

/// Inverse of vec; rejects vectors whose length is not d^2.
Operator unvec(const Vector& v, Index d);

/// Superoperator X -> A X B, i.e. (B^T kron A) in Liouville form.
SuperOperator left_right(const Operator& a, const Operator& b);

/// Build a superoperator by sampling an arbitrary linear map on the d^2
/// matrix units.
SuperOperator superop_from_map(Index d,
                               const std::function<Operator(const Operator&)>& f);

/// exp(m * t) via scaling-and-squaring (Pade); throws on non-finite input.
Operator expm(const Operator& m, double t = 1.0);
SuperOperator expm(const SuperOperator& m, double t = 1.0);

/// Trace out the second (auxiliary) tensor factor of a dim d_sys*d_aux
/// operator. Trace-preserving: Tr(out) = Tr(x).
Operator partial_trace_aux(const Operator& x, Index d_sys, Index d_aux);

/// Computational basis column vector |j> in dimension d.
Vector ket(Index d, Index j);

/// Matrix unit |i><j| in dimension d.
Operator matrix_unit(Index d, Index i, Index j);

Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

/// Realification of a superoperator: real parts of all entries followed by
/// imaginary parts, a real vector of length 2 d^4. Real-linear and
/// invertible, so real spans of superoperators map to real spans of vectors.
RealVector realify(const SuperOperator& s);
SuperOperator unrealify(const RealVector& v, Index d);

/// Incrementally grown orthonormal real basis (Gram-Schmidt with a second
/// re-orthogonalization pass). Insertion is deterministic in input order.
class SpanAccumulator {
 public:
  explicit SpanAccumulator(double tol = 1e-8) : tol_(tol) {}

  /// Residual of v after projecting out the current span (two passes).
  RealVector residual(const RealVector& v) const;

  /// Single-pass residual norm. With a basis orthonormal to near machine
  /// precision this matches the true residual norm far beyond any tolerance
  /// used for rank decisions, at half the cost.
  double residual_norm_quick(const RealVector& v) const;

  /// Inserts the normalized residual if the residual norm relative to the
  /// reference scale exceeds tol. `scale` defaults to ||v||.
  bool try_insert(const RealVector& v, double scale = -1.0);

  /// Appends a vector the caller has already orthonormalized against the
  /// current basis.
  void push_orthonormal(const RealVector& v);

  Index rank() const { return count_; }
  std::vector<RealVector> basis() const;
  double tol() const { return tol_; }

 private:
  double tol_;
  RealMatrix columns_;  // leftCols(count_) holds the basis
  Index count_ = 0;
};

struct RealSpan {
  Index rank = 0;
  std::vector<RealVector> basis;  // orthonormal, deterministic order
};

/// Rank and orthonormal basis of the real span of realified superoperators.
/// The dependence threshold is tol relative to the largest input norm.
RealSpan real_span_rank(const std::vector<SuperOperator>& ops, double tol = 1e-8);

}  // namespace lindpur
