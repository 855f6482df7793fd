#include "nohair/entangled.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nohair/linalg.hpp"
#include "nohair/metrics.hpp"
#include "nohair/tradeoff.hpp"

namespace nohair {

namespace {

void check_spectrum(const std::vector<double>& lambdas) {
  if (lambdas.empty()) throw std::invalid_argument("SchmidtInput: empty spectrum");
  double sum = 0.0;
  for (double l : lambdas) {
    if (l < -1e-15) throw std::invalid_argument("SchmidtInput: negative weight");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("SchmidtInput: weights must sum to one");
  }
}

void check_unitary(const Matrix& u, const char* what) {
  Matrix gram = u.adjoint() * u;
  gram -= Matrix::Identity(u.cols(), u.cols());
  if (gram.cwiseAbs().maxCoeff() > tol::isometry) {
    throw std::invalid_argument(std::string("SchmidtInput: ") + what + " is not unitary");
  }
}

}  // namespace

SchmidtInput::SchmidtInput(std::vector<double> lambdas, Index dim_f)
    : SchmidtInput(std::move(lambdas), Matrix::Identity(dim_f, dim_f),
                   Matrix::Identity(0, 0)) {}

SchmidtInput::SchmidtInput(std::vector<double> lambdas, Matrix f_basis, Matrix r_basis)
    : lambdas_(std::move(lambdas)), f_basis_(std::move(f_basis)), r_basis_(std::move(r_basis)) {
  check_spectrum(lambdas_);
  const Index len = static_cast<Index>(lambdas_.size());
  if (r_basis_.size() == 0) r_basis_ = Matrix::Identity(len, len);
  if (f_basis_.rows() != f_basis_.cols() || f_basis_.rows() < len) {
    throw std::invalid_argument("SchmidtInput: Schmidt length exceeds dim F");
  }
  if (r_basis_.rows() != len || r_basis_.cols() != len) {
    throw std::invalid_argument("SchmidtInput: reference basis must be Schmidt-length square");
  }
  check_unitary(f_basis_, "F basis");
  check_unitary(r_basis_, "R basis");
}

Matrix SchmidtInput::reference_marginal() const {
  const Index len = schmidt_length();
  Matrix diag = Matrix::Zero(len, len);
  for (Index i = 0; i < len; ++i) diag(i, i) = lambdas_[static_cast<std::size_t>(i)];
  return r_basis_ * diag * r_basis_.adjoint();
}

PureStateVec joint_state(const HorizonModel& model, const SchmidtInput& input) {
  if (input.dim_f() != model.dim_f()) {
    throw std::invalid_argument("joint_state: input does not match the model's F space");
  }
  const Matrix w = model.stinespring();
  const Index len = input.schmidt_length();
  const Index dim_ie = w.rows();
  Vector psi = Vector::Zero(dim_ie * len);
  for (Index i = 0; i < len; ++i) {
    const double l = input.lambdas()[static_cast<std::size_t>(i)];
    if (l == 0.0) continue;
    Vector branch = w * (input.f_basis().col(i));
    Vector ref = input.r_basis().col(i);
    psi += std::sqrt(l) * tensor_product(branch, ref);
  }
  SubsystemLayout layout({model.dim_i(), model.dim_e(), len},
                         {{0, Role::I}, {1, Role::E}, {2, Role::R}});
  return PureStateVec(std::move(psi), std::move(layout));
}

DensityOp er_state(const HorizonModel& model, const SchmidtInput& input) {
  return DensityOp::pure(joint_state(model, input)).partial_trace({1, 2});
}

double factorization_residual(const HorizonModel& model, const SchmidtInput& input,
                              const Matrix& pivot) {
  if (pivot.rows() != model.dim_e() || pivot.cols() != model.dim_e()) {
    throw std::invalid_argument("factorization_residual: pivot must live on H_E");
  }
  Matrix rho_er = er_state(model, input).matrix();
  Matrix product = tensor_product(pivot, input.reference_marginal());
  return trace_distance(rho_er, product);
}

DerBoundRecord der_bound_check(const HorizonModel& model, const SchmidtInput& a,
                               const SchmidtInput& b, double eps_upper) {
  if (a.schmidt_length() != b.schmidt_length()) {
    throw std::invalid_argument("der_bound_check: inputs need equal Schmidt length");
  }
  DerBoundRecord rec;
  rec.der = trace_distance(er_state(model, a).matrix(), er_state(model, b).matrix());
  const double ref_td = trace_distance(a.reference_marginal(), b.reference_marginal());
  rec.rhs = 2.0 * std::sqrt(2.0 * eps_upper) + ref_td;
  rec.holds = rec.der <= rec.rhs + 1e-6;
  return rec;
}

DerBoundRecord der_bound_check(const HorizonModel& model, const SchmidtInput& a,
                               const SchmidtInput& b) {
  EpsilonBracket eps = compute_epsilon(model, 1e-6);
  return der_bound_check(model, a, b, eps.upper);
}

}  // namespace nohair
