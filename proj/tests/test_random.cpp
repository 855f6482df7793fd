#include <doctest.h>

#include <cmath>

#include "nohair/random.hpp"
#include "nohair/rng.hpp"

using namespace nohair;

TEST_CASE("haar_unitary at dim 1 is a unit-modulus scalar") {
  SeededRng rng(1, 0);
  Matrix u = haar_unitary(1, rng);
  CHECK(std::abs(std::abs(u(0, 0)) - 1.0) < 1e-14);
}

TEST_CASE("haar_unitary satisfies the unitarity contract") {
  SeededRng rng(2, 0);
  for (Index dim : {2, 3, 4, 8, 16}) {
    Matrix u = haar_unitary(dim, rng);
    Matrix defect = u.adjoint() * u - Matrix::Identity(dim, dim);
    CHECK(defect.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("equal (seed, stream) draws are bitwise identical") {
  SeededRng a(42, 7);
  SeededRng b(42, 7);
  Matrix ua = haar_unitary(5, a);
  Matrix ub = haar_unitary(5, b);
  CHECK((ua.array() == ub.array()).all());

  SeededRng c(42, 8);
  Matrix uc = haar_unitary(5, c);
  CHECK((ua - uc).cwiseAbs().maxCoeff() > 1e-6);  // distinct streams differ
}

TEST_CASE("substreams are independent of draw order") {
  SeededRng base(99, 3);
  SeededRng s1 = base.substream(1);
  // Consuming the base stream must not affect derived streams.
  (void)base.normal();
  (void)base.normal();
  SeededRng s1_again = SeededRng(99, 3).substream(1);
  CHECK(s1.normal() == s1_again.normal());
}

TEST_CASE("random pure states are normalized") {
  SeededRng rng(3, 0);
  for (int k = 0; k < 10000; ++k) {
    Vector v = haar_state(4, rng);
    CHECK(std::abs(v.norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("first-amplitude moment matches 1/d at dim 4") {
  SeededRng rng(4, 0);
  const int n = 100000;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    Vector v = haar_state(4, rng);
    acc += std::norm(v(0));
  }
  acc /= n;
  CHECK(acc == doctest::Approx(0.25).epsilon(0.02));  // 0.25 +- 0.005
  CHECK(std::abs(acc - 0.25) < 0.005);
}

TEST_CASE("|Tr U|^2 moment matches the Haar value 1 within 3 sigma at dim 4") {
  SeededRng rng(5, 0);
  const int n = 10000;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    Matrix u = haar_unitary(4, rng);
    acc += std::norm(u.trace());
  }
  acc /= n;
  // Var(|Tr U|^2) = 1 for the circular unitary ensemble at this dimension,
  // so 3 sigma of the mean estimate is 3/sqrt(n).
  CHECK(std::abs(acc - 1.0) < 3.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("haar isometry columns are orthonormal") {
  SeededRng rng(6, 0);
  Matrix v = haar_isometry(6, 3, rng);
  Matrix gram = v.adjoint() * v - Matrix::Identity(3, 3);
  CHECK(gram.cwiseAbs().maxCoeff() < 1e-12);
}
