#pragma once

#include <map>
#include <vector>

#include "nohair/channel.hpp"
#include "nohair/layout.hpp"
#include "nohair/random.hpp"
#include "nohair/states.hpp"
#include "nohair/types.hpp"

namespace nohair {

/// Finite-dimensional horizon-crossing model: a global unitary U on
/// F (x) BH, a fixed black-hole state |Phi0>, a declared interior/exterior
/// split of the output space, an ideal embedding V: F -> I, and a
/// conserved-charge label per F basis vector.
///
/// The output layout must order the factors [I, E]; 1_F (x) |Phi0> feeds U
/// and the result is read in that split.
class HorizonModel {
 public:
  HorizonModel(Matrix u, Vector phi0, SubsystemLayout output_layout,
               IsometricEmbedding v, std::vector<int> charges);

  const Matrix& unitary() const { return u_; }
  const Vector& phi0() const { return phi0_; }
  const SubsystemLayout& output_layout() const { return layout_; }
  const IsometricEmbedding& embedding() const { return v_; }
  const std::vector<int>& charges() const { return charges_; }

  Index dim_f() const { return static_cast<Index>(charges_.size()); }
  Index dim_bh() const { return phi0_.size(); }
  Index dim_i() const { return layout_.dim(0); }
  Index dim_e() const { return layout_.dim(1); }

  /// Stinespring isometry of the interior channel: columns U(|i> (x) |Phi0>),
  /// read as I (x) E with E minor.
  Matrix stinespring() const;

  /// Same model with a different declared ideal embedding.
  HorizonModel with_embedding(IsometricEmbedding v) const;
  /// Same model with different charge labels.
  HorizonModel with_charges(std::vector<int> charges) const;

 private:
  Matrix u_;
  Vector phi0_;
  SubsystemLayout layout_;
  IsometricEmbedding v_;
  std::vector<int> charges_;
};

/// N_I: rho -> Tr_E[U (rho (x) |Phi0><Phi0|) U^dag] in Stinespring form.
Channel interior_channel(const HorizonModel& model);

/// The environment-side map N_E (complementary of N_I).
Channel exterior_channel(const HorizonModel& model);

/// Reduced output states for a pure infaller, computed without forming the
/// global density matrix. `w` is the model's Stinespring isometry.
Matrix exterior_state_from_isometry(const Matrix& w, Index dim_i, Index dim_e,
                                    const Vector& psi);
Matrix interior_state_from_isometry(const Matrix& w, Index dim_i, Index dim_e,
                                    const Vector& psi);

Matrix exterior_state(const HorizonModel& model, const Vector& psi);
Matrix interior_state(const HorizonModel& model, const Vector& psi);

/// Basis indices grouped by charge label.
std::map<int, std::vector<Index>> charge_sectors(const HorizonModel& model);

/// Lift a family channel to a HorizonModel whose interior channel equals it:
/// V is the identity embedding and U is the unitary completion of the
/// channel's Stinespring isometry, with |Phi0> = |0> on a black-hole factor
/// the size of the dilation environment.
HorizonModel embed_family_as_horizon(const ChannelFamilySpec& spec);

/// Haar-random model: Haar U, Haar |Phi0>, canonical split I = F, E = BH,
/// identity embedding, a single charge sector.
HorizonModel random_horizon_model(Index dim_f, Index dim_bh, SeededRng& rng);

/// Ideal model U(psi (x) Phi0) = V psi (x) chi with Haar V and chi.
/// Requires dim_i >= dim_f and dim_i | dim_f * dim_bh.
HorizonModel make_ideal_model(Index dim_f, Index dim_bh, Index dim_i, SeededRng& rng);

/// Ideal model with exact 0/1 entries (U = 1, V = 1, Phi0 = chi = |0>).
HorizonModel make_ideal_model_exact(Index dim_f, Index dim_bh);

/// Qubit swap model: U = SWAP, so the interior holds |0><0| regardless of
/// the input and the exterior receives the infalling state unchanged.
HorizonModel make_swap_model();

}  // namespace nohair
