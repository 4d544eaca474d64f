#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <utility>

namespace lindpur {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline constexpr Complex imag_unit{0.0, 1.0};

/// Dense complex d x d matrix: Hamiltonians, Lindblad operators, density
/// matrices, projectors.
class Operator {
 public:
  Operator() = default;
  explicit Operator(Matrix m) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols()) {
      throw std::invalid_argument("Operator: matrix must be square");
    }
  }

  static Operator zero(Index d) { return Operator(Matrix::Zero(d, d)); }
  static Operator identity(Index d) { return Operator(Matrix::Identity(d, d)); }

  Index dim() const { return mat_.rows(); }
  const Matrix& mat() const { return mat_; }

  Operator adjoint() const { return Operator(mat_.adjoint()); }
  Operator transpose() const { return Operator(mat_.transpose()); }
  Operator conjugate() const { return Operator(mat_.conjugate()); }
  Complex trace() const { return mat_.trace(); }
  double norm() const { return mat_.norm(); }  // Frobenius

  bool is_hermitian(double tol = 1e-10) const;
  bool is_unitary(double tol = 1e-10) const;
  /// Hermitian, positive semidefinite within tol, unit trace.
  bool is_density(double tol = 1e-10) const;
  /// Hermitian idempotent.
  bool is_projector(double tol = 1e-10) const;

  friend Operator operator+(const Operator& a, const Operator& b) {
    return Operator(a.mat_ + b.mat_);
  }
  friend Operator operator-(const Operator& a, const Operator& b) {
    return Operator(a.mat_ - b.mat_);
  }
  friend Operator operator-(const Operator& a) { return Operator(-a.mat_); }
  friend Operator operator*(const Operator& a, const Operator& b) {
    return Operator(a.mat_ * b.mat_);
  }
  friend Operator operator*(Complex c, const Operator& a) {
    return Operator(c * a.mat_);
  }
  friend Operator operator*(double c, const Operator& a) {
    return Operator(c * a.mat_);
  }

 private:
  Matrix mat_;
};

/// Linear map on operators in Liouville form: a d^2 x d^2 complex matrix
/// acting on column-stacked (vec) operators.
class SuperOperator {
 public:
  SuperOperator() = default;
  explicit SuperOperator(Matrix m);

  static SuperOperator zero(Index d);
  static SuperOperator identity(Index d);

  /// Dimension d of the underlying operator space (matrix side is d^2).
  Index dim() const { return op_dim_; }
  const Matrix& mat() const { return mat_; }

  Operator apply(const Operator& x) const;

  /// True iff Tr(S(X)) = 0 for every X, i.e. the row vec(I)^T annihilates
  /// the matrix.
  bool is_trace_preserving_generator(double tol = 1e-10) const;
  /// True iff S(X^dag)^dag = S(X) for every X.
  bool is_hermiticity_preserving(double tol = 1e-10) const;

  double norm() const { return mat_.norm(); }  // Frobenius

  friend SuperOperator operator+(const SuperOperator& a, const SuperOperator& b) {
    return SuperOperator(a.mat_ + b.mat_);
  }
  friend SuperOperator operator-(const SuperOperator& a, const SuperOperator& b) {
    return SuperOperator(a.mat_ - b.mat_);
  }
  friend SuperOperator operator-(const SuperOperator& a) {
    return SuperOperator(-a.mat_);
  }
  /// Composition a after b.
  friend SuperOperator operator*(const SuperOperator& a, const SuperOperator& b) {
    return SuperOperator(a.mat_ * b.mat_);
  }
  friend SuperOperator operator*(Complex c, const SuperOperator& a) {
    return SuperOperator(c * a.mat_);
  }
  friend SuperOperator operator*(double c, const SuperOperator& a) {
    return SuperOperator(c * a.mat_);
  }

 private:
  Matrix mat_;
  Index op_dim_ = 0;
};

/// [a, b] = a o b - b o a.
SuperOperator commutator(const SuperOperator& a, const SuperOperator& b);
Operator commutator(const Operator& a, const Operator& b);

}  // namespace lindpur
