#pragma once

#include <vector>

#include "lindpur/gkls.hpp"
#include "lindpur/types.hpp"

namespace lindpur {

/// Commuting embeddings of a generator set on dim d*n, one auxiliary basis
/// state per generator: H_j -> n H_j kron |j><j|, L -> sqrt(n) L kron |j><j|.
struct PurifiedSet {
  std::vector<GklsGenerator> generators;
  Index system_dim = 0;
  Index aux_dim = 0;
};

/// Non-selective measurement map rho -> sum_k P_k rho P_k over a complete
/// family of mutually orthogonal Hermitian projectors; idempotent and CPTP.
class Superprojector {
 public:
  static Superprojector from_projectors(std::vector<Operator> projectors,
                                        double tol = 1e-10);

  const std::vector<Operator>& projectors() const { return projectors_; }
  const SuperOperator& superop() const { return superop_; }
  Index dim() const { return superop_.dim(); }

 private:
  Superprojector(std::vector<Operator> projectors, SuperOperator superop)
      : projectors_(std::move(projectors)), superop_(std::move(superop)) {}

  std::vector<Operator> projectors_;
  SuperOperator superop_;
};

struct PurifiedHamiltonianPair {
  Operator first;      // H1 kron I2 + H2 kron sigma_x
  Operator second;     // H2 kron I2 + H1 kron sigma_x
  Operator projector;  // I_d kron (I2 + sigma_z)/2
};

/// Commuting pair on dim 2d with a single auxiliary qubit; the originals are
/// recovered as P H~ P on the projector subspace.
PurifiedHamiltonianPair purify_hamiltonian_pair(const Operator& h1, const Operator& h2);

/// Finite-step measured unitary evolution (P e^{-i h t/N} P)^N; approaches
/// e^{-i (P h P) t} P as N grows.
Operator hamiltonian_zeno(const Operator& h, const Operator& p, double t, int n_steps);

/// Lindbladian purification: one auxiliary dimension per generator. All
/// assembled superoperators commute pairwise by construction.
PurifiedSet purify_lindbladians(const std::vector<GklsGenerator>& gens);

/// Discrete-Fourier basis |phi_k> = n^{-1/2} sum_j e^{2 pi i j k / n} |j>,
/// mutually unbiased against the computational basis: |<j|phi_k>|^2 = 1/n.
std::vector<Vector> fourier_mub(Index n);

/// Superprojector with P_k = I_{d_sys} kron |phi_k><phi_k|. The basis must be
/// orthonormal and complete.
Superprojector superprojector_from_basis(Index d_sys, const std::vector<Vector>& basis,
                                         double tol = 1e-10);

}  // namespace lindpur
