#include "nohair/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nohair {

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector tensor_product(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

Matrix partial_trace(const Matrix& m, const std::vector<Index>& dims,
                     const std::vector<std::size_t>& keep) {
  if (m.rows() != m.cols()) throw std::invalid_argument("partial_trace: non-square input");
  Index total = 1;
  for (Index d : dims) total *= d;
  if (m.rows() != total) throw std::invalid_argument("partial_trace: dims do not match matrix");
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set empty");
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= dims.size()) throw std::out_of_range("partial_trace: factor index out of range");
    if (k > 0 && keep[k] <= keep[k - 1]) {
      throw std::invalid_argument("partial_trace: keep must be strictly increasing");
    }
  }

  std::vector<Index> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];

  std::vector<std::size_t> traced;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (std::find(keep.begin(), keep.end(), k) == keep.end()) traced.push_back(k);
  }

  // Linear offsets of every kept and every traced multi-index.
  auto offsets = [&](const std::vector<std::size_t>& factors) {
    Index count = 1;
    for (std::size_t f : factors) count *= dims[f];
    std::vector<Index> off(static_cast<std::size_t>(count), 0);
    Index repeat = 1;
    for (std::size_t f : factors) {
      const Index d = dims[f];
      const Index block = count / (repeat * d);
      Index idx = 0;
      for (Index r = 0; r < repeat; ++r) {
        for (Index v = 0; v < d; ++v) {
          for (Index b = 0; b < block; ++b) {
            off[static_cast<std::size_t>(idx)] += v * strides[f];
            ++idx;
          }
        }
      }
      repeat *= d;
    }
    return off;
  };

  const std::vector<Index> keep_off = offsets(keep);
  const std::vector<Index> trace_off = offsets(traced);

  const Index kd = static_cast<Index>(keep_off.size());
  Matrix out = Matrix::Zero(kd, kd);
  for (Index r = 0; r < kd; ++r) {
    for (Index c = 0; c < kd; ++c) {
      Complex s = 0.0;
      for (Index t = 0; t < static_cast<Index>(trace_off.size()); ++t) {
        s += m(keep_off[static_cast<std::size_t>(r)] + trace_off[static_cast<std::size_t>(t)],
               keep_off[static_cast<std::size_t>(c)] + trace_off[static_cast<std::size_t>(t)]);
      }
      out(r, c) = s;
    }
  }
  return out;
}

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Matrix hermitize(const Matrix& m, double guard) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitize: non-square input");
  if (hermiticity_defect(m) > guard) {
    throw std::invalid_argument("hermitize: asymmetry exceeds guard tolerance");
  }
  return 0.5 * (m + m.adjoint().eval());
}

double trace_norm(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("trace_norm: non-square input");
  if (m.size() == 0) return 0.0;
  if (hermiticity_defect(m) <= 1e-13 * std::max(1.0, m.cwiseAbs().maxCoeff())) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint().eval()),
                                             Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

RealVector hermitian_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint().eval()),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

SignDecomposition hermitian_sign(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint().eval()));
  const RealVector& ev = es.eigenvalues();
  RealVector sgn(ev.size());
  double tn = 0.0;
  for (Index i = 0; i < ev.size(); ++i) {
    sgn(i) = ev(i) >= 0.0 ? 1.0 : -1.0;
    tn += std::abs(ev(i));
  }
  Matrix s = es.eigenvectors() * sgn.asDiagonal() * es.eigenvectors().adjoint();
  return {std::move(s), tn};
}

Matrix psd_projection(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint().eval()));
  RealVector ev = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

double min_eigenvalue(const Matrix& m) {
  return hermitian_eigenvalues(m).minCoeff();
}

double max_eigenvalue(const Matrix& m) {
  return hermitian_eigenvalues(m).maxCoeff();
}

Matrix complete_to_unitary(const Matrix& fixed_columns,
                           const std::vector<Index>& fixed_positions) {
  const Index dim = fixed_columns.rows();
  if (static_cast<Index>(fixed_positions.size()) != fixed_columns.cols()) {
    throw std::invalid_argument("complete_to_unitary: position count mismatch");
  }
  Matrix u = Matrix::Zero(dim, dim);
  std::vector<bool> used(static_cast<std::size_t>(dim), false);
  std::vector<Vector> basis;
  basis.reserve(static_cast<std::size_t>(dim));
  for (Index c = 0; c < fixed_columns.cols(); ++c) {
    u.col(fixed_positions[static_cast<std::size_t>(c)]) = fixed_columns.col(c);
    basis.push_back(fixed_columns.col(c));
    used[static_cast<std::size_t>(fixed_positions[static_cast<std::size_t>(c)])] = true;
  }
  // Fill the free columns from standard basis vectors, modified Gram-Schmidt
  // with one reorthogonalization pass.
  Index next_free = 0;
  for (Index cand = 0; cand < dim && basis.size() < static_cast<std::size_t>(dim); ++cand) {
    Vector v = Vector::Zero(dim);
    v(cand) = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& b : basis) v -= (b.dot(v)) * b;
    }
    const double n = v.norm();
    if (n < 1e-6) continue;
    v /= n;
    while (used[static_cast<std::size_t>(next_free)]) ++next_free;
    u.col(next_free) = v;
    used[static_cast<std::size_t>(next_free)] = true;
    basis.push_back(std::move(v));
  }
  if (basis.size() != static_cast<std::size_t>(dim)) {
    throw std::runtime_error("complete_to_unitary: failed to complete basis");
  }
  return u;
}

}  // namespace nohair
