#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nohair/horizon.hpp"
#include "nohair/metrics.hpp"
#include "nohair/rng.hpp"
#include "nohair/types.hpp"

namespace nohair {

enum class Verdict { pass, fail, indeterminate };
std::string verdict_name(Verdict v);

struct RngProvenance {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Certified bracket of epsilon = (1/2)|| N_I - Ad_V ||_diamond.
struct EpsilonBracket {
  double lower = 0.0;
  double upper = 0.0;
  bool certified = false;
  long solver_iters = 0;
};
EpsilonBracket compute_epsilon(const HorizonModel& model, double tol);
EpsilonBracket compute_epsilon(const HorizonModel& model, const DiamondOptions& opts);

/// <psi| V^dag rho_I(psi) V |psi>: probability that an interior observer
/// confirms the ideally embedded infalling state.
double interior_fidelity(const HorizonModel& model, const Vector& psi);

/// Lower bound on the exterior distinguishability
/// max over same-charge pure pairs of TD(rho_E(psi), rho_E(psi')),
/// by multi-start joint ascent within each charge sector.
struct DmaxResult {
  double dmax_lower = 0.0;
  Vector psi_a, psi_b;  // witness pair on H_F
};
DmaxResult compute_dmax(const HorizonModel& model, int restarts, SeededRng& rng);

/// Approximate 1-center of the exterior outputs:
/// min over states sigma of max over pure psi of TD(rho_E(psi), sigma).
/// Alternates a multi-start inner maximization with subgradient descent on
/// the outer minimax; pure pivots are searched alongside mixed ones. The
/// returned radius is an exact evaluation of the inner max at the returned
/// pivot, so it upper-bounds the true minimax once the inner search has
/// converged (restart count reported for that judgement).
struct PivotResult {
  double radius = 0.0;
  Matrix pivot;
  bool converged = false;
  int inner_restarts = 0;
  double trace_deficit = 0.0;  // 1 - tr of any renormalized pivot candidate
  // radius - (max pairwise output distance)/2: certified distance between the
  // reported radius and the true minimax; convergence means this closed.
  double center_gap = 0.0;
};
PivotResult pivot_radius(const HorizonModel& model, int samples, SeededRng& rng,
                         const std::vector<Vector>& seed_inputs = {});

/// Minimum interior fidelity over the F basis, all two-element basis
/// superpositions, and `haar_samples` Haar states.
double fidelity_floor(const HorizonModel& model, int haar_samples, SeededRng& rng);

/// Max exterior distinguishability over sampled same-charge pairs of a
/// (near-)ideal model, with orthogonal pairs additionally routed through the
/// bridge state (|a> + |b>)/sqrt(2). Precondition: certified epsilon_upper at
/// or below `epsilon_threshold` (throws otherwise).
double lemma1_check(const HorizonModel& model, int pair_count, SeededRng& rng,
                    double epsilon_threshold = 1e-9, double tol = 1e-8);

struct VerifyOptions {
  double tol = 1e-6;            // diamond certification gap
  int restarts = 32;            // multi-start budget (epsilon and dmax)
  int samples = 256;            // Haar fidelity samples
  int pivot_rounds = 24;        // alternating rounds of the pivot search
  int lemma1_pairs = 0;         // when > 0 and the model is ideal enough, run lemma1_check
  double lemma1_threshold = 1e-9;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Slack constants used by the verdicts.
namespace slack {
inline constexpr double inequality = 1e-7;  // dmax <= 2 sqrt(2 eps) + this
inline constexpr double fvdg = 1e-7;        // eps >= 1 - fid_floor - this
inline constexpr double pivot = 1e-6;       // pivot chain comparisons
}  // namespace slack

struct TradeoffReport {
  double epsilon_lower = 0.0;
  double epsilon_upper = 0.0;
  double dmax_lower = 0.0;
  double pivot_radius = 0.0;
  double fidelity_floor = 1.0;
  double bound_value = 0.0;  // 2 sqrt(2 epsilon_upper)
  bool inequality_holds = false;
  bool fvdg_holds = false;      // epsilon_upper >= 1 - fidelity_floor - slack
  bool triangle_holds = false;  // dmax_lower <= 2 pivot_radius + slack
  bool pivot_chain_holds = false;  // pivot_radius <= sqrt(2 epsilon_upper) + slack
  bool epsilon_certified = false;
  bool pivot_converged = false;
  std::optional<double> lemma1_residual;
  double pivot_trace_deficit = 0.0;
  Verdict verdict = Verdict::indeterminate;
  RngProvenance rng;
};

TradeoffReport verify_tradeoff(const HorizonModel& model, const VerifyOptions& opts);

/// Thrown when a fit lacks the mandated number of certified points.
class InsufficientCertifiedData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScalingPoint {
  double param = 0.0;
  double eps_lower = 0.0;
  double eps_upper = 0.0;
  double dmax_lower = 0.0;
  bool certified = false;
};

struct ScalingFit {
  Family family = Family::depolarizing;
  std::vector<ScalingPoint> points;  // all computed points, including excluded ones
  double slope = 0.0;                // log-log regression of dmax on eps
  double intercept = 0.0;
  double r_squared = 0.0;
  int fitted_points = 0;
};

/// Least-squares fit of log(dmax_lower) against log(eps_upper) across a
/// family parameter grid. Uncertified or degenerate (eps <= 0) points are
/// excluded; fewer than five usable points raises InsufficientCertifiedData.
ScalingFit scaling_fit(Family family, Index dim, const std::vector<double>& params,
                       double tol, int restarts, std::uint64_t seed,
                       std::uint64_t stream = 0);

/// Plain least squares on (x, y) pairs; exposed for the fit tests.
struct LineFit {
  double slope = 0.0, intercept = 0.0, r_squared = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace nohair
