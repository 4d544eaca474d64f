#include "lindpur/gkls.hpp"

#include <stdexcept>

namespace lindpur {

GklsGenerator::GklsGenerator(Operator hamiltonian, std::vector<Operator> lindblad_ops,
                             double hermiticity_tol)
    : hamiltonian_(std::move(hamiltonian)), lindblad_ops_(std::move(lindblad_ops)) {
  if (!hamiltonian_.is_hermitian(hermiticity_tol)) {
    throw std::invalid_argument("GklsGenerator: Hamiltonian must be Hermitian");
  }
  for (const auto& l : lindblad_ops_) {
    if (l.dim() != hamiltonian_.dim()) {
      throw std::invalid_argument("GklsGenerator: all operators must share one dimension");
    }
  }
}

SuperOperator hamiltonian_superop(const Operator& h, double tol) {
  if (!h.is_hermitian(tol)) {
    throw std::invalid_argument("hamiltonian_superop: Hamiltonian must be Hermitian");
  }
  const Operator id = Operator::identity(h.dim());
  const Matrix m = kron(id, h).mat() - kron(h.transpose(), id).mat();
  return SuperOperator(-imag_unit * m);
}

SuperOperator dissipator_superop(const Operator& l) {
  return generalized_dissipator(l, l);
}

SuperOperator generalized_dissipator(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("generalized_dissipator: dimension mismatch");
  }
  const Operator id = Operator::identity(a.dim());
  const Operator adb = a.adjoint() * b;
  const Matrix m = 2.0 * kron(a.conjugate(), b).mat() -
                   kron(id, adb).mat() - kron(adb.transpose(), id).mat();
  return SuperOperator(m);
}

SuperOperator ad_unitary(const Operator& u, double tol) {
  if (!u.is_unitary(tol)) {
    throw std::invalid_argument("ad_unitary: input must be unitary");
  }
  return SuperOperator(kron(u.conjugate(), u).mat());
}

SuperOperator assemble(const GklsGenerator& g) {
  SuperOperator s = hamiltonian_superop(g.hamiltonian());
  for (const auto& l : g.lindblad_ops()) {
    s = s + dissipator_superop(l);
  }
  return s;
}

Operator choi(const SuperOperator& s) {
  const Index d = s.dim();
  Matrix c = Matrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const Operator unit = matrix_unit(d, i, j);
      c += kron(unit, s.apply(unit)).mat();
    }
  }
  return Operator(std::move(c));
}

bool is_cptp(const SuperOperator& s, double choi_tol, double tp_tol) {
  const Index d = s.dim();
  const Operator c = choi(s);
  if (!c.is_hermitian(choi_tol)) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es((c.mat() + c.mat().adjoint()) / 2.0);
  if (es.eigenvalues().minCoeff() < -choi_tol) return false;
  // Trace preservation: vec(I)^T S = vec(I)^T.
  const Vector trace_row = vec(Operator::identity(d));
  const Matrix defect = trace_row.transpose() * s.mat() - trace_row.transpose();
  return defect.cwiseAbs().maxCoeff() <= tp_tol;
}

SuperOperator propagate_piecewise(const GklsGenerator& drift,
                                  const std::vector<Operator>& controls,
                                  const ControlSchedule& schedule) {
  for (const auto& hk : controls) {
    if (hk.dim() != drift.dim()) {
      throw std::invalid_argument("propagate_piecewise: control dimension mismatch");
    }
  }
  const SuperOperator drift_superop = assemble(drift);
  SuperOperator prop = SuperOperator::identity(drift.dim());
  for (const auto& seg : schedule.segments) {
    if (seg.duration < 0.0) {
      throw std::invalid_argument("propagate_piecewise: negative segment duration");
    }
    if (seg.controls.size() != controls.size()) {
      throw std::invalid_argument("propagate_piecewise: control count mismatch");
    }
    Operator h = Operator::zero(drift.dim());
    for (std::size_t k = 0; k < controls.size(); ++k) {
      h = h + seg.controls[k] * controls[k];
    }
    const SuperOperator generator = drift_superop + hamiltonian_superop(h);
    prop = expm(generator, seg.duration) * prop;
  }
  return prop;
}

}  // namespace lindpur
