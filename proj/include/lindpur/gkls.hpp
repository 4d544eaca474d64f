#pragma once

#include <vector>

#include "lindpur/linalg.hpp"
#include "lindpur/types.hpp"

namespace lindpur {

// Dissipator normalization used everywhere in this library:
//
//     D_L(rho) = 2 L rho L^dag - L^dag L rho - rho L^dag L
//
// i.e. a factor 2 on the sandwich term and no 1/2 on the anticommutator.
// Most other libraries halve this; rates here are absorbed into the Lindblad
// operators.

/// A GKLS generator in symbolic form: one Hermitian Hamiltonian plus a list
/// of Lindblad operators of the same dimension.
class GklsGenerator {
 public:
  GklsGenerator(Operator hamiltonian, std::vector<Operator> lindblad_ops,
                double hermiticity_tol = 1e-10);

  Index dim() const { return hamiltonian_.dim(); }
  const Operator& hamiltonian() const { return hamiltonian_; }
  const std::vector<Operator>& lindblad_ops() const { return lindblad_ops_; }

 private:
  Operator hamiltonian_;
  std::vector<Operator> lindblad_ops_;
};

/// Piecewise-constant control schedule; every segment carries the same
/// number of control values.
struct ControlSegment {
  double duration = 0.0;
  std::vector<double> controls;
};

struct ControlSchedule {
  std::vector<ControlSegment> segments;
};

/// K(rho) = -i [h, rho] in Liouville form -i (I kron h - h^T kron I).
/// Rejects non-Hermitian h.
SuperOperator hamiltonian_superop(const Operator& h, double tol = 1e-10);

/// D_L as defined above (factor-2 convention).
SuperOperator dissipator_superop(const Operator& l);

/// D_{A,B}(rho) = 2 B rho A^dag - A^dag B rho - rho A^dag B;
/// D_{L,L} = dissipator_superop(L).
SuperOperator generalized_dissipator(const Operator& a, const Operator& b);

/// Ad_U(rho) = U rho U^dag, Liouville form conj(U) kron U. Rejects
/// non-unitary input.
SuperOperator ad_unitary(const Operator& u, double tol = 1e-10);

/// Hamiltonian part plus the sum of dissipators over all Lindblad operators.
SuperOperator assemble(const GklsGenerator& g);

/// Choi matrix sum_ij |i><j| kron S(|i><j|) on dim d*d.
Operator choi(const SuperOperator& s);

/// CPTP iff the Choi matrix is positive semidefinite within choi_tol and the
/// map preserves traces within tp_tol.
bool is_cptp(const SuperOperator& s, double choi_tol = 1e-9, double tp_tol = 1e-10);

/// Propagator of the controlled master equation with H(t) = H0 + sum_k u_k H_k
/// over a piecewise-constant schedule; later segments compose on the left.
SuperOperator propagate_piecewise(const GklsGenerator& drift,
                                  const std::vector<Operator>& controls,
                                  const ControlSchedule& schedule);

}  // namespace lindpur
