#include <doctest.h>

#include <cmath>

#include "nohair/linalg.hpp"
#include "nohair/random.hpp"
#include "nohair/states.hpp"

using namespace nohair;

namespace {

Matrix pauli_x() {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

Vector basis(Index dim, Index k) {
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("tensor product of identities is the identity") {
  Matrix i2 = Matrix::Identity(2, 2);
  CHECK((tensor_product(i2, i2) - Matrix::Identity(4, 4)).norm() == 0.0);
}

TEST_CASE("tensor product basis bookkeeping: |0> (x) |1> = e_1") {
  Vector v = tensor_product(basis(2, 0), basis(2, 1));
  CHECK(v(1) == Complex(1.0, 0.0));
  CHECK(v.cwiseAbs().sum() == 1.0);
}

TEST_CASE("single-factor action: (X (x) 1)(|0>|0>) = |1>|0>") {
  Matrix op = tensor_product(pauli_x(), Matrix::Identity(2, 2));
  Vector in = tensor_product(basis(2, 0), basis(2, 0));
  Vector out = op * in;
  CHECK((out - tensor_product(basis(2, 1), basis(2, 0))).norm() == 0.0);
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
  Vector bell = (tensor_product(basis(2, 0), basis(2, 0)) +
                 tensor_product(basis(2, 1), basis(2, 1))) /
                std::sqrt(2.0);
  Matrix rho = bell * bell.adjoint();
  Matrix reduced = partial_trace(rho, {2, 2}, {0});
  CHECK((reduced - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial trace of a product state recovers the kept factor") {
  SeededRng rng(7, 0);
  Matrix a = random_density_matrix(3, rng);
  Matrix b = random_density_matrix(4, rng);
  Matrix rho = tensor_product(a, b);
  CHECK((partial_trace(rho, {3, 4}, {0}) - a).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((partial_trace(rho, {3, 4}, {1}) - b).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("partial trace keeping all factors is the identity map") {
  SeededRng rng(8, 0);
  Matrix rho = random_density_matrix(6, rng);
  CHECK((partial_trace(rho, {2, 3}, {0, 1}) - rho).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("partial trace rejects out-of-range factors") {
  Matrix rho = Matrix::Identity(4, 4);
  CHECK_THROWS_AS(partial_trace(rho, {2, 2}, {2}), std::out_of_range);
}

TEST_CASE("tracing out everything stepwise preserves the full trace") {
  SeededRng rng(9, 0);
  for (int rep = 0; rep < 20; ++rep) {
    Matrix rho = random_density_matrix(8, rng);
    Matrix step = partial_trace(rho, {2, 2, 2}, {0, 1});  // drop the last factor
    Matrix rest = partial_trace(step, {2, 2}, {0});
    CHECK(std::abs(rest.trace().real() - 1.0) < 1e-10);
    CHECK(std::abs(rest.trace().real() - rho.trace().real()) < 1e-10);
  }
}

TEST_CASE("trace norm basics") {
  CHECK(trace_norm(Matrix::Zero(3, 3)) == 0.0);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = -0.5;
  CHECK(trace_norm(d) == doctest::Approx(1.0).epsilon(1e-12));
  SeededRng rng(10, 0);
  for (Index dim : {2, 3, 5}) {
    Matrix u = haar_unitary(dim, rng);
    CHECK(trace_norm(u) == doctest::Approx(static_cast<double>(dim)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(trace_norm(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("trace norm is multiplicative under tensor products") {
  SeededRng rng(11, 0);
  for (int rep = 0; rep < 10; ++rep) {
    Matrix a = random_hermitian(2, rng);
    Matrix b = random_hermitian(3, rng);
    const double lhs = trace_norm(tensor_product(a, b));
    const double rhs = trace_norm(a) * trace_norm(b);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("hermitian eigendecomposition reconstructs up to dim 64") {
  SeededRng rng(12, 0);
  for (Index dim : {2, 8, 32, 64}) {
    Matrix m = random_hermitian(dim, rng);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    Matrix rec = es.eigenvectors() * es.eigenvalues().asDiagonal() *
                 es.eigenvectors().adjoint();
    CHECK((m - rec).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("hermitize symmetrizes small drift and rejects real asymmetry") {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = Complex(0.0, 1e-13);
  Matrix h = hermitize(m);
  CHECK(hermiticity_defect(h) < 1e-18);
  m(0, 1) = Complex(0.0, 1e-6);
  CHECK_THROWS_AS(hermitize(m), std::invalid_argument);
}

TEST_CASE("density operator guards: trace, hermiticity, eigenvalue floor") {
  Matrix ok = 0.5 * Matrix::Identity(2, 2);
  DensityOp rho = DensityOp::single(ok);
  CHECK(rho.eigenvalues_admissible());
  Matrix bad_trace = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityOp::single(bad_trace), std::invalid_argument);
}

TEST_CASE("complete_to_unitary extends isometric columns") {
  SeededRng rng(13, 0);
  for (int rep = 0; rep < 5; ++rep) {
    Matrix v = haar_isometry(6, 2, rng);
    Matrix u = complete_to_unitary(v, {0, 3});
    Matrix gram = u.adjoint() * u;
    CHECK((gram - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((u.col(0) - v.col(0)).norm() == 0.0);
    CHECK((u.col(3) - v.col(1)).norm() == 0.0);
  }
}
