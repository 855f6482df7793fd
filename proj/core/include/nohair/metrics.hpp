#pragma once

#include <optional>

#include "nohair/channel.hpp"
#include "nohair/rng.hpp"
#include "nohair/states.hpp"
#include "nohair/types.hpp"

namespace nohair {

/// Half trace norm of the difference, in [0, 1] for density operators.
double trace_distance(const Matrix& a, const Matrix& b);
double trace_distance(const DensityOp& a, const DensityOp& b);

/// <psi| rho |psi> as a real number (imaginary residue discarded).
double fidelity_to_pure(const Matrix& rho, const Vector& psi);
double fidelity_to_pure(const DensityOp& rho, const PureStateVec& psi);

struct FvdgRecord {
  double fid_gap;  // 1 - <psi|rho|psi>
  double td;       // trace distance to |psi><psi|
  bool holds;      // fid_gap <= td + 1e-9
};
FvdgRecord fvdg_check(const Matrix& rho, const Vector& psi);
FvdgRecord fvdg_check(const DensityOp& rho, const PureStateVec& psi);

struct DiamondOptions {
  double tol = 1e-6;           // certification gap target (halved convention)
  int restarts = 32;           // variational multi-starts
  int max_ascent_iters = 5000;
  long max_solver_iters = 200000;
  double relaxation = 1.5;     // splitting over-relaxation in (0, 2)
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;    // restart starting points derive from (seed, stream)
};

/// Certified bracket of half the diamond-norm distance between two channels.
///
/// `lower` is a variational witness value: multi-start projected-gradient
/// ascent of psi -> (1/2)|| ((a-b) (x) id_ref)(|psi><psi|) ||_1 over pure
/// states on in (x) ref with dim ref = dim in. `upper` comes from the
/// operator-splitting solve of the completely bounded trace-norm program on
/// the Choi difference; every reported upper is a repaired dual-feasible
/// certificate, so it is a valid bound even before convergence.
struct DiamondResult {
  double lower = 0.0;
  double upper = 0.0;
  double gap = 0.0;           // upper - lower
  bool certified = false;     // gap <= tol
  Vector witness;             // pure state on in (x) ref achieving `lower`
  long solver_iters = 0;
};

DiamondResult diamond_distance(const Channel& a, const Channel& b, double tol);
DiamondResult diamond_distance(const Channel& a, const Channel& b,
                               const DiamondOptions& opts);

/// Best witness over unentangled inputs: max_psi TD(a(psi), b(psi)).
struct SeparableWitness {
  double value = 0.0;
  Vector psi;
};
SeparableWitness best_separable_witness(const Channel& a, const Channel& b,
                                        int restarts, SeededRng& rng);

/// Independent sampling oracle: max over `samples` Haar pure states on
/// in (x) ref of the witness objective. Lower-bounds the halved diamond
/// distance; used to cross-check the two solvers.
double diamond_sampling_lower(const Channel& a, const Channel& b, long samples,
                              SeededRng& rng);

}  // namespace nohair
