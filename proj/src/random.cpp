#include "lindpur/random.hpp"

#include <cmath>
#include <numbers>

namespace lindpur {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

Operator random_matrix(Rng& rng, Index d) {
  Matrix m(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      m(i, j) = Complex{rng.normal(), rng.normal()};
    }
  }
  return Operator(std::move(m));
}

Operator random_hermitian(Rng& rng, Index d) {
  const Matrix g = random_matrix(rng, d).mat();
  return Operator((g + g.adjoint()) / 2.0);
}

Operator random_unitary(Rng& rng, Index d) {
  const Matrix g = random_matrix(rng, d).mat();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a == 0.0) ? Complex{1.0, 0.0} : rjj / a;
  }
  return Operator(std::move(q));
}

Operator random_density(Rng& rng, Index d) {
  const Matrix g = random_matrix(rng, d).mat();
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return Operator(std::move(rho));
}

Operator random_unitary_on_subset(Rng& rng, Index d, const std::vector<Index>& subset) {
  const auto k = static_cast<Index>(subset.size());
  const Matrix block = random_unitary(rng, k).mat();
  Matrix u = Matrix::Identity(d, d);
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) {
      u(subset[a], subset[b]) = block(a, b);
    }
  }
  return Operator(std::move(u));
}

}  // namespace lindpur
