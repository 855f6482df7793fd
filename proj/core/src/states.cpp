#include "nohair/states.hpp"

#include <cmath>
#include <stdexcept>

namespace nohair {

PureStateVec::PureStateVec(Vector amplitudes, SubsystemLayout layout)
    : amps_(std::move(amplitudes)), layout_(std::move(layout)) {
  if (amps_.size() != layout_.total_dim()) {
    throw std::invalid_argument("PureStateVec: amplitude count does not match layout");
  }
  if (std::abs(amps_.norm() - 1.0) > tol::unit_norm) {
    throw std::invalid_argument("PureStateVec: not normalized");
  }
}

PureStateVec PureStateVec::single(Vector amplitudes, Role role) {
  const Index d = amplitudes.size();
  return PureStateVec(std::move(amplitudes), SubsystemLayout({d}, {{0, role}}));
}

DensityOp::DensityOp(Matrix m, SubsystemLayout layout, double expected_trace)
    : layout_(std::move(layout)), expected_trace_(expected_trace) {
  if (m.rows() != m.cols() || m.rows() != layout_.total_dim()) {
    throw std::invalid_argument("DensityOp: matrix does not match layout");
  }
  m_ = hermitize(m);
  if (std::abs(m_.trace().real() - expected_trace_) > tol::unit_trace) {
    throw std::invalid_argument("DensityOp: trace deviates from declared value");
  }
}

DensityOp DensityOp::single(Matrix m, Role role, double expected_trace) {
  const Index d = m.rows();
  return DensityOp(std::move(m), SubsystemLayout({d}, {{0, role}}), expected_trace);
}

DensityOp DensityOp::pure(const PureStateVec& psi) {
  return DensityOp(psi.amplitudes() * psi.amplitudes().adjoint(), psi.layout());
}

bool DensityOp::eigenvalues_admissible() const {
  return hermitian_eigenvalues(m_).minCoeff() >= tol::eigen_floor;
}

DensityOp DensityOp::partial_trace(const std::vector<std::size_t>& keep) const {
  Matrix reduced = nohair::partial_trace(m_, layout_.dims(), keep);
  std::vector<Index> kept_dims;
  std::map<std::size_t, Role> kept_roles;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    kept_dims.push_back(layout_.dim(keep[k]));
    if (auto r = layout_.role_of(keep[k])) kept_roles[k] = *r;
  }
  return DensityOp(std::move(reduced), SubsystemLayout(kept_dims, kept_roles), expected_trace_);
}

}  // namespace nohair
