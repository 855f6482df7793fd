#pragma once

#include <optional>
#include <vector>

#include "nohair/layout.hpp"
#include "nohair/linalg.hpp"
#include "nohair/types.hpp"

namespace nohair {

/// Pure state over a SubsystemLayout. Unit norm within tol::unit_norm.
class PureStateVec {
 public:
  PureStateVec(Vector amplitudes, SubsystemLayout layout);
  /// Single-factor layout convenience.
  static PureStateVec single(Vector amplitudes, Role role = Role::F);

  const Vector& amplitudes() const { return amps_; }
  const SubsystemLayout& layout() const { return layout_; }
  Index dim() const { return amps_.size(); }

 private:
  Vector amps_;
  SubsystemLayout layout_;
};

/// Density operator over a SubsystemLayout.
///
/// Construction symmetrizes (M + M^dag)/2 when the asymmetry is within the
/// hermiticity guard and rejects otherwise, so floating-point drift cannot
/// reach the eigensolvers. The trace is checked against `expected_trace`
/// (1 unless a caller declares a subnormalization).
class DensityOp {
 public:
  DensityOp(Matrix m, SubsystemLayout layout, double expected_trace = 1.0);
  static DensityOp single(Matrix m, Role role = Role::F, double expected_trace = 1.0);
  static DensityOp pure(const PureStateVec& psi);

  const Matrix& matrix() const { return m_; }
  const SubsystemLayout& layout() const { return layout_; }
  Index dim() const { return m_.rows(); }
  double declared_trace() const { return expected_trace_; }

  /// Eigenvalue floor check (>= tol::eigen_floor); O(d^3), opt-in.
  bool eigenvalues_admissible() const;

  /// Reduced operator on the kept factors (strictly increasing indices).
  DensityOp partial_trace(const std::vector<std::size_t>& keep) const;

 private:
  Matrix m_;
  SubsystemLayout layout_;
  double expected_trace_;
};

}  // namespace nohair
