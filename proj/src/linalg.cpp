#include "lindpur/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace lindpur {

SuperOperator::SuperOperator(Matrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols()) {
    throw std::invalid_argument("SuperOperator: matrix must be square");
  }
  const auto d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(mat_.rows()))));
  if (d * d != mat_.rows()) {
    throw std::invalid_argument("SuperOperator: side must be a perfect square");
  }
  op_dim_ = d;
}

SuperOperator SuperOperator::zero(Index d) {
  return SuperOperator(Matrix::Zero(d * d, d * d));
}

SuperOperator SuperOperator::identity(Index d) {
  return SuperOperator(Matrix::Identity(d * d, d * d));
}

Operator SuperOperator::apply(const Operator& x) const {
  if (x.dim() != op_dim_) {
    throw std::invalid_argument("SuperOperator::apply: dimension mismatch");
  }
  return unvec(mat_ * vec(x), op_dim_);
}

bool SuperOperator::is_trace_preserving_generator(double tol) const {
  const Vector trace_row = vec(Operator::identity(op_dim_));
  return (trace_row.transpose() * mat_).cwiseAbs().maxCoeff() <= tol;
}

bool SuperOperator::is_hermiticity_preserving(double tol) const {
  for (Index i = 0; i < op_dim_; ++i) {
    for (Index j = 0; j < op_dim_; ++j) {
      const Operator unit = matrix_unit(op_dim_, i, j);
      const Matrix lhs = apply(unit.adjoint()).mat().adjoint();
      const Matrix rhs = apply(unit).mat();
      if ((lhs - rhs).cwiseAbs().maxCoeff() > tol) return false;
    }
  }
  return true;
}

SuperOperator commutator(const SuperOperator& a, const SuperOperator& b) {
  return SuperOperator(a.mat() * b.mat() - b.mat() * a.mat());
}

Operator commutator(const Operator& a, const Operator& b) {
  return Operator(a.mat() * b.mat() - b.mat() * a.mat());
}

bool Operator::is_hermitian(double tol) const {
  return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_unitary(double tol) const {
  const Matrix g = mat_.adjoint() * mat_;
  return (g - Matrix::Identity(dim(), dim())).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_density(double tol) const {
  if (!is_hermitian(tol)) return false;
  if (std::abs(trace() - Complex{1.0, 0.0}) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es((mat_ + mat_.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff() >= -tol;
}

bool Operator::is_projector(double tol) const {
  return is_hermitian(tol) && (mat_ * mat_ - mat_).cwiseAbs().maxCoeff() <= tol;
}

Operator kron(const Operator& a, const Operator& b) {
  const Index da = a.dim();
  const Index db = b.dim();
  Matrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i) {
    for (Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.mat()(i, j) * b.mat();
    }
  }
  return Operator(std::move(out));
}

Vector vec(const Operator& x) {
  const Index d = x.dim();
  Vector v(d * d);
  for (Index col = 0; col < d; ++col) {
    v.segment(col * d, d) = x.mat().col(col);
  }
  return v;
}

Operator unvec(const Vector& v, Index d) {
  if (v.size() != d * d) {
    throw std::invalid_argument("unvec: vector length must be d^2");
  }
  Matrix m(d, d);
  for (Index col = 0; col < d; ++col) {
    m.col(col) = v.segment(col * d, d);
  }
  return Operator(std::move(m));
}

SuperOperator left_right(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("left_right: dimension mismatch");
  }
  return SuperOperator(kron(b.transpose(), a).mat());
}

SuperOperator superop_from_map(Index d,
                               const std::function<Operator(const Operator&)>& f) {
  Matrix m(d * d, d * d);
  for (Index j = 0; j < d; ++j) {
    for (Index i = 0; i < d; ++i) {
      m.col(j * d + i) = vec(f(matrix_unit(d, i, j)));
    }
  }
  return SuperOperator(std::move(m));
}

namespace {

Matrix expm_impl(const Matrix& m, double t) {
  if (!m.allFinite() || !std::isfinite(t)) {
    throw std::invalid_argument("expm: non-finite input");
  }
  return (m * t).exp();
}

}  // namespace

Operator expm(const Operator& m, double t) { return Operator(expm_impl(m.mat(), t)); }

SuperOperator expm(const SuperOperator& m, double t) {
  return SuperOperator(expm_impl(m.mat(), t));
}

Operator partial_trace_aux(const Operator& x, Index d_sys, Index d_aux) {
  if (x.dim() != d_sys * d_aux) {
    throw std::invalid_argument("partial_trace_aux: dimension mismatch");
  }
  Matrix out = Matrix::Zero(d_sys, d_sys);
  for (Index r = 0; r < d_sys; ++r) {
    for (Index c = 0; c < d_sys; ++c) {
      for (Index a = 0; a < d_aux; ++a) {
        out(r, c) += x.mat()(r * d_aux + a, c * d_aux + a);
      }
    }
  }
  return Operator(std::move(out));
}

Vector ket(Index d, Index j) {
  Vector v = Vector::Zero(d);
  v(j) = 1.0;
  return v;
}

Operator matrix_unit(Index d, Index i, Index j) {
  Matrix m = Matrix::Zero(d, d);
  m(i, j) = 1.0;
  return Operator(std::move(m));
}

Operator pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return Operator(std::move(m));
}

Operator pauli_y() {
  Matrix m(2, 2);
  m << Complex{0, 0}, Complex{0, -1}, Complex{0, 1}, Complex{0, 0};
  return Operator(std::move(m));
}

Operator pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return Operator(std::move(m));
}

RealVector realify(const SuperOperator& s) {
  const Index n = s.mat().size();
  RealVector v(2 * n);
  const auto& m = s.mat();
  for (Index col = 0, k = 0; col < m.cols(); ++col) {
    for (Index row = 0; row < m.rows(); ++row, ++k) {
      v(k) = m(row, col).real();
      v(n + k) = m(row, col).imag();
    }
  }
  return v;
}

SuperOperator unrealify(const RealVector& v, Index d) {
  const Index n = d * d * d * d;
  if (v.size() != 2 * n) {
    throw std::invalid_argument("unrealify: vector length must be 2 d^4");
  }
  Matrix m(d * d, d * d);
  for (Index col = 0, k = 0; col < d * d; ++col) {
    for (Index row = 0; row < d * d; ++row, ++k) {
      m(row, col) = Complex{v(k), v(n + k)};
    }
  }
  return SuperOperator(std::move(m));
}

RealVector SpanAccumulator::residual(const RealVector& v) const {
  RealVector r = v;
  if (count_ > 0) {
    const auto b = columns_.leftCols(count_);
    r.noalias() -= b * (b.transpose() * r);
    r.noalias() -= b * (b.transpose() * r);
  }
  return r;
}

double SpanAccumulator::residual_norm_quick(const RealVector& v) const {
  if (count_ == 0) return v.norm();
  const auto b = columns_.leftCols(count_);
  return (v - b * (b.transpose() * v)).norm();
}

bool SpanAccumulator::try_insert(const RealVector& v, double scale) {
  const double nv = v.norm();
  if (scale < 0.0) scale = nv;
  if (nv == 0.0 || scale == 0.0) return false;
  const RealVector r = residual(v);
  const double rn = r.norm();
  if (rn <= tol_ * scale) return false;
  push_orthonormal(r / rn);
  return true;
}

void SpanAccumulator::push_orthonormal(const RealVector& v) {
  if (columns_.cols() == count_) {
    const Index grown = std::max<Index>(16, 2 * columns_.cols());
    columns_.conservativeResize(v.size(), grown);
  }
  columns_.col(count_++) = v;
}

std::vector<RealVector> SpanAccumulator::basis() const {
  std::vector<RealVector> out;
  out.reserve(count_);
  for (Index i = 0; i < count_; ++i) {
    out.push_back(columns_.col(i));
  }
  return out;
}

RealSpan real_span_rank(const std::vector<SuperOperator>& ops, double tol) {
  SpanAccumulator acc(tol);
  double max_norm = 0.0;
  std::vector<RealVector> vs;
  vs.reserve(ops.size());
  for (const auto& op : ops) {
    vs.push_back(realify(op));
    max_norm = std::max(max_norm, vs.back().norm());
  }
  for (const auto& v : vs) {
    acc.try_insert(v, max_norm);
  }
  return RealSpan{acc.rank(), acc.basis()};
}

}  // namespace lindpur
