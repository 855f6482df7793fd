#include "nohair/random.hpp"

#include <Eigen/QR>
#include <cmath>
#include <stdexcept>

namespace nohair {

namespace {

Matrix ginibre(Index rows, Index cols, SeededRng& rng) {
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      g(i, j) = rng.complex_normal();
    }
  }
  return g;
}

}  // namespace

Matrix haar_unitary(Index dim, SeededRng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_unitary: dim must be >= 1");
  Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Fix the gauge: multiply column k by phase(R_kk) so Q follows the Haar
  // measure rather than the QR convention.
  Vector diag = qr.matrixQR().diagonal();
  for (Index k = 0; k < dim; ++k) {
    const double a = std::abs(diag(k));
    const Complex phase = a > 0.0 ? diag(k) / a : Complex(1.0, 0.0);
    q.col(k) *= phase;
  }
  return q;
}

Vector haar_state(Index dim, SeededRng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_state: dim must be >= 1");
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = rng.complex_normal();
  double n = v.norm();
  while (n == 0.0) {  // measure-zero, but keep the contract total
    for (Index i = 0; i < dim; ++i) v(i) = rng.complex_normal();
    n = v.norm();
  }
  return v / n;
}

PureStateVec random_pure_state(Index dim, SeededRng& rng, Role role) {
  return PureStateVec::single(haar_state(dim, rng), role);
}

Matrix random_density_matrix(Index dim, SeededRng& rng) {
  Matrix g = ginibre(dim, dim, rng);
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Matrix random_hermitian(Index dim, SeededRng& rng) {
  Matrix g = ginibre(dim, dim, rng);
  return 0.5 * (g + g.adjoint().eval());
}

Matrix haar_isometry(Index rows, Index cols, SeededRng& rng) {
  if (cols > rows) throw std::invalid_argument("haar_isometry: cols > rows");
  return haar_unitary(rows, rng).leftCols(cols);
}

}  // namespace nohair
