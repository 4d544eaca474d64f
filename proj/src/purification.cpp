#include "lindpur/purification.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lindpur {

Superprojector Superprojector::from_projectors(std::vector<Operator> projectors,
                                               double tol) {
  if (projectors.empty()) {
    throw std::invalid_argument("Superprojector: empty projector family");
  }
  const Index d = projectors.front().dim();
  Matrix sum = Matrix::Zero(d, d);
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    const auto& pk = projectors[k];
    if (pk.dim() != d) {
      throw std::invalid_argument("Superprojector: projector dimension mismatch");
    }
    if (!pk.is_hermitian(tol)) {
      throw std::invalid_argument("Superprojector: projectors must be Hermitian");
    }
    for (std::size_t k2 = 0; k2 < projectors.size(); ++k2) {
      const Matrix prod = pk.mat() * projectors[k2].mat();
      const Matrix expected = (k == k2) ? pk.mat() : Matrix::Zero(d, d);
      if ((prod - expected).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument(
            "Superprojector: family must satisfy P_k P_k' = delta_kk' P_k");
      }
    }
    sum += pk.mat();
  }
  if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("Superprojector: projectors must sum to the identity");
  }
  SuperOperator s = SuperOperator::zero(d);
  for (const auto& pk : projectors) {
    s = s + left_right(pk, pk);
  }
  return Superprojector(std::move(projectors), std::move(s));
}

PurifiedHamiltonianPair purify_hamiltonian_pair(const Operator& h1, const Operator& h2) {
  if (h1.dim() != h2.dim()) {
    throw std::invalid_argument("purify_hamiltonian_pair: dimension mismatch");
  }
  if (!h1.is_hermitian() || !h2.is_hermitian()) {
    throw std::invalid_argument("purify_hamiltonian_pair: inputs must be Hermitian");
  }
  const Operator id2 = Operator::identity(2);
  const Operator sx = pauli_x();
  Matrix up = Matrix::Zero(2, 2);
  up(0, 0) = 1.0;  // (I2 + sigma_z)/2
  return PurifiedHamiltonianPair{
      kron(h1, id2) + kron(h2, sx),
      kron(h2, id2) + kron(h1, sx),
      kron(Operator::identity(h1.dim()), Operator(up)),
  };
}

Operator hamiltonian_zeno(const Operator& h, const Operator& p, double t, int n_steps) {
  if (h.dim() != p.dim()) {
    throw std::invalid_argument("hamiltonian_zeno: dimension mismatch");
  }
  if (!p.is_projector()) {
    throw std::invalid_argument("hamiltonian_zeno: p must be a projector");
  }
  if (n_steps < 1) {
    throw std::invalid_argument("hamiltonian_zeno: n_steps must be >= 1");
  }
  const Operator step = p * expm(Operator(-imag_unit * h.mat()), t / n_steps) * p;
  Matrix result = Matrix::Identity(h.dim(), h.dim());
  Matrix base = step.mat();
  for (int e = n_steps; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return Operator(std::move(result));
}

PurifiedSet purify_lindbladians(const std::vector<GklsGenerator>& gens) {
  if (gens.empty()) {
    throw std::invalid_argument("purify_lindbladians: empty generator list");
  }
  const Index d = gens.front().dim();
  const auto n = static_cast<Index>(gens.size());
  for (const auto& g : gens) {
    if (g.dim() != d) {
      throw std::invalid_argument("purify_lindbladians: system dimensions differ");
    }
  }
  PurifiedSet out;
  out.system_dim = d;
  out.aux_dim = n;
  const double root_n = std::sqrt(static_cast<double>(n));
  for (Index j = 0; j < n; ++j) {
    const Operator aux = matrix_unit(n, j, j);
    Operator h = static_cast<double>(n) * kron(gens[j].hamiltonian(), aux);
    std::vector<Operator> ls;
    ls.reserve(gens[j].lindblad_ops().size());
    for (const auto& l : gens[j].lindblad_ops()) {
      ls.push_back(root_n * kron(l, aux));
    }
    out.generators.emplace_back(std::move(h), std::move(ls));
  }
  return out;
}

std::vector<Vector> fourier_mub(Index n) {
  if (n < 1) {
    throw std::invalid_argument("fourier_mub: n must be >= 1");
  }
  std::vector<Vector> basis;
  basis.reserve(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (Index k = 0; k < n; ++k) {
    Vector v(n);
    for (Index j = 0; j < n; ++j) {
      const double phase = 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(n);
      v(j) = norm * Complex{std::cos(phase), std::sin(phase)};
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Superprojector superprojector_from_basis(Index d_sys, const std::vector<Vector>& basis,
                                         double tol) {
  if (basis.empty()) {
    throw std::invalid_argument("superprojector_from_basis: empty basis");
  }
  const auto n = static_cast<Index>(basis.size());
  for (const auto& v : basis) {
    if (v.size() != n) {
      throw std::invalid_argument(
          "superprojector_from_basis: basis must be complete (n vectors of length n)");
    }
  }
  for (Index k = 0; k < n; ++k) {
    for (Index k2 = 0; k2 < n; ++k2) {
      const Complex overlap = basis[k].dot(basis[k2]);
      const Complex expected = (k == k2) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(overlap - expected) > tol) {
        throw std::invalid_argument("superprojector_from_basis: basis not orthonormal");
      }
    }
  }
  const Operator id_sys = Operator::identity(d_sys);
  std::vector<Operator> projectors;
  projectors.reserve(n);
  for (const auto& v : basis) {
    projectors.push_back(kron(id_sys, Operator(v * v.adjoint())));
  }
  return Superprojector::from_projectors(std::move(projectors), tol);
}

}  // namespace lindpur
