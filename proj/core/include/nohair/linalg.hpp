#pragma once

#include <vector>

#include "nohair/types.hpp"

namespace nohair {

/// Kronecker product with row-major factor ordering: the left factor is the
/// most significant index, matching SubsystemLayout order.
Matrix tensor_product(const Matrix& a, const Matrix& b);
Vector tensor_product(const Vector& a, const Vector& b);

/// Partial trace of a square matrix over the factors NOT listed in `keep`.
/// `dims` are the factor dimensions in layout order; `keep` lists factor
/// indices to retain (order-preserving, must be strictly increasing).
Matrix partial_trace(const Matrix& m, const std::vector<Index>& dims,
                     const std::vector<std::size_t>& keep);

/// Sum of singular values. For Hermitian input this equals the sum of
/// absolute eigenvalues and is computed that way.
double trace_norm(const Matrix& m);

/// (M + M^dag)/2 when the asymmetry is within `guard`; throws otherwise.
Matrix hermitize(const Matrix& m, double guard = tol::hermiticity);

/// Eigenvalues of a Hermitian matrix, ascending. Input is hermitized.
RealVector hermitian_eigenvalues(const Matrix& m);

/// sign(M) = sum_i sgn(lambda_i) v_i v_i^dag for Hermitian M, together with
/// the trace norm it witnesses: ||M||_1 = <sign(M), M>.
struct SignDecomposition {
  Matrix sign;
  double trace_norm;
};
SignDecomposition hermitian_sign(const Matrix& m);

/// Projection onto the positive semidefinite cone (Hermitian part taken first).
Matrix psd_projection(const Matrix& m);

/// Smallest eigenvalue of the Hermitian part.
double min_eigenvalue(const Matrix& m);
/// Largest eigenvalue of the Hermitian part.
double max_eigenvalue(const Matrix& m);

/// Max-abs entry of M - M^dag; 0 for exactly Hermitian input.
double hermiticity_defect(const Matrix& m);

/// Extend a set of orthonormal columns, placed at `fixed_positions` of a
/// dim x dim unitary, to a full unitary by Gram-Schmidt over the standard
/// basis. Deterministic.
Matrix complete_to_unitary(const Matrix& fixed_columns,
                           const std::vector<Index>& fixed_positions);

}  // namespace nohair
