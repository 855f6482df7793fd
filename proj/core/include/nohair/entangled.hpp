#pragma once

#include <vector>

#include "nohair/horizon.hpp"
#include "nohair/states.hpp"
#include "nohair/types.hpp"

namespace nohair {

/// Pure F-R input in Schmidt form: sum_i sqrt(lambda_i) |f_i> (x) |r_i>.
/// The reference dimension equals the Schmidt length. Bases default to
/// computational; rotated bases enter as explicit unitaries.
class SchmidtInput {
 public:
  SchmidtInput(std::vector<double> lambdas, Index dim_f);
  SchmidtInput(std::vector<double> lambdas, Matrix f_basis, Matrix r_basis);

  const std::vector<double>& lambdas() const { return lambdas_; }
  Index schmidt_length() const { return static_cast<Index>(lambdas_.size()); }
  Index dim_f() const { return f_basis_.rows(); }
  const Matrix& f_basis() const { return f_basis_; }
  const Matrix& r_basis() const { return r_basis_; }

  /// rho_R the reference would hold with or without infall:
  /// r_basis diag(lambda) r_basis^dag.
  Matrix reference_marginal() const;

 private:
  std::vector<double> lambdas_;
  Matrix f_basis_;  // dim_f x dim_f unitary, first L columns used
  Matrix r_basis_;  // L x L unitary
};

/// Post-infall global state sum_i sqrt(lambda_i) (W_N |f_i>)_IE (x) |r_i>_R
/// on the layout [I, E, R].
PureStateVec joint_state(const HorizonModel& model, const SchmidtInput& input);

/// rho_ER = Tr_I of the joint state.
DensityOp er_state(const HorizonModel& model, const SchmidtInput& input);

/// TD(rho_ER, pivot (x) rho_R): how far the joint exterior-reference state is
/// from the product of an input-independent pivot with the untouched
/// reference marginal. Bounded by sqrt(2 eps) for a valid pivot.
double factorization_residual(const HorizonModel& model, const SchmidtInput& input,
                              const Matrix& pivot);

struct DerBoundRecord {
  double der = 0.0;   // TD(rho_ER(a), rho_ER(b))
  double rhs = 0.0;   // 2 sqrt(2 eps_upper) + TD(rho_R(a), rho_R(b))
  bool holds = false; // der <= rhs + 1e-6
};

/// Distinguishability decomposition for two entangled inputs: anything the
/// (E, R) observer gains beyond the reference's pre-existing information is
/// bounded by the horizon-smoothness budget.
DerBoundRecord der_bound_check(const HorizonModel& model, const SchmidtInput& a,
                               const SchmidtInput& b, double eps_upper);

/// Convenience overload computing the certified eps_upper internally.
DerBoundRecord der_bound_check(const HorizonModel& model, const SchmidtInput& a,
                               const SchmidtInput& b);

}  // namespace nohair
