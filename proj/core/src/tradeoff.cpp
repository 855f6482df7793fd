#include "nohair/tradeoff.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace nohair {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

EpsilonBracket compute_epsilon(const HorizonModel& model, double tol) {
  DiamondOptions opts;
  opts.tol = tol;
  return compute_epsilon(model, opts);
}

EpsilonBracket compute_epsilon(const HorizonModel& model, const DiamondOptions& opts) {
  Channel actual = interior_channel(model);
  Channel ideal = ideal_infall(model.embedding(), 1);
  DiamondResult r = diamond_distance(actual, ideal, opts);
  return {r.lower, r.upper, r.certified, r.solver_iters};
}

double interior_fidelity(const HorizonModel& model, const Vector& psi) {
  if (psi.size() != model.dim_f()) {
    throw std::invalid_argument("interior_fidelity: psi must live on H_F");
  }
  Matrix rho_i = interior_state(model, psi);
  Vector embedded = model.embedding().matrix() * psi;
  return fidelity_to_pure(rho_i, embedded);
}

namespace {

// G = P^dag W^dag (1_I (x) S) W P restricted to the sector columns of W.
Matrix sector_gradient_operator(const Matrix& w_sector, Index dim_i, Index dim_e,
                                const Matrix& s) {
  const Index cols = w_sector.cols();
  Matrix g = Matrix::Zero(cols, cols);
  for (Index a = 0; a < dim_i; ++a) {
    const Matrix block = w_sector.middleRows(a * dim_e, dim_e);
    g.noalias() += block.adjoint() * s * block;
  }
  return 0.5 * (g + g.adjoint().eval());
}

Vector embed_sector(const std::vector<Index>& sector, const Vector& coords, Index dim_f) {
  Vector psi = Vector::Zero(dim_f);
  for (std::size_t k = 0; k < sector.size(); ++k) {
    psi(sector[k]) = coords(static_cast<Index>(k));
  }
  return psi;
}

// Euclidean projection of a Hermitian matrix onto the density-matrix set
// (eigenvalues onto the probability simplex).
Matrix density_projection(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint().eval()));
  RealVector ev = es.eigenvalues();
  std::vector<double> sorted(ev.data(), ev.data() + ev.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cum = 0.0;
  double theta = 0.0;
  int support = 0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    cum += sorted[j];
    const double candidate = (cum - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) {
      theta = candidate;
      support = static_cast<int>(j + 1);
    }
  }
  (void)support;
  RealVector clipped = (ev.array() - theta).max(0.0);
  return es.eigenvectors() * clipped.asDiagonal() * es.eigenvectors().adjoint();
}

struct InnerMax {
  double value = 0.0;
  Vector psi;
};

// Multi-start monotone ascent of psi -> TD(rho_E(psi), sigma) over the full
// F sphere: alternate the trace-norm sign operator with the top eigenvector
// of the pulled-back objective.
InnerMax inner_maximize(const Matrix& w, Index dim_i, Index dim_e, const Matrix& sigma,
                        const std::vector<Vector>& starts) {
  InnerMax best;
  for (const Vector& start : starts) {
    Vector psi = start;
    double f = trace_distance(exterior_state_from_isometry(w, dim_i, dim_e, psi), sigma);
    for (int it = 0; it < 200; ++it) {
      const Matrix delta =
          exterior_state_from_isometry(w, dim_i, dim_e, psi) - sigma;
      const auto sg = hermitian_sign(delta);
      Matrix h = sector_gradient_operator(w, dim_i, dim_e, sg.sign);
      Eigen::SelfAdjointEigenSolver<Matrix> es(h);
      Vector cand = es.eigenvectors().col(h.rows() - 1);
      const double fc =
          trace_distance(exterior_state_from_isometry(w, dim_i, dim_e, cand), sigma);
      if (fc <= f + 1e-13) break;
      psi = std::move(cand);
      f = fc;
    }
    if (f > best.value || best.psi.size() == 0) {
      best.value = f;
      best.psi = std::move(psi);
    }
  }
  return best;
}

}  // namespace

DmaxResult compute_dmax(const HorizonModel& model, int restarts, SeededRng& rng) {
  if (restarts < 1) throw std::invalid_argument("compute_dmax: restarts must be >= 1");
  const Matrix w = model.stinespring();
  const Index dim_i = model.dim_i();
  const Index dim_e = model.dim_e();
  const Index dim_f = model.dim_f();

  DmaxResult best;
  {
    // Degenerate default: a single basis state (covers dim-1 sectors).
    Vector e0 = Vector::Zero(dim_f);
    e0(0) = 1.0;
    best.psi_a = e0;
    best.psi_b = e0;
  }

  std::uint64_t stream_key = 0;
  for (const auto& [charge, sector] : charge_sectors(model)) {
    const Index s = static_cast<Index>(sector.size());
    if (s < 2) continue;
    Matrix ws(w.rows(), s);
    for (Index k = 0; k < s; ++k) ws.col(k) = w.col(sector[static_cast<std::size_t>(k)]);

    // Starting pairs: all basis pairs plus Haar restarts.
    std::vector<std::pair<Vector, Vector>> starts;
    for (Index i = 0; i < s; ++i) {
      for (Index j = i + 1; j < s; ++j) {
        Vector a = Vector::Zero(s), b = Vector::Zero(s);
        a(i) = 1.0;
        b(j) = 1.0;
        starts.emplace_back(std::move(a), std::move(b));
      }
    }
    SeededRng sector_rng = rng.substream(0x2000 + stream_key++);
    for (int r = 0; r < restarts; ++r) {
      starts.emplace_back(haar_state(s, sector_rng), haar_state(s, sector_rng));
    }

    for (auto& [ca, cb] : starts) {
      double f = trace_distance(exterior_state_from_isometry(ws, dim_i, dim_e, ca),
                                exterior_state_from_isometry(ws, dim_i, dim_e, cb));
      for (int it = 0; it < 500; ++it) {
        const Matrix delta = exterior_state_from_isometry(ws, dim_i, dim_e, ca) -
                             exterior_state_from_isometry(ws, dim_i, dim_e, cb);
        const auto sg = hermitian_sign(delta);
        Matrix g = sector_gradient_operator(ws, dim_i, dim_e, sg.sign);
        Eigen::SelfAdjointEigenSolver<Matrix> es(g);
        Vector na = es.eigenvectors().col(s - 1);
        Vector nb = es.eigenvectors().col(0);
        const double fc =
            trace_distance(exterior_state_from_isometry(ws, dim_i, dim_e, na),
                           exterior_state_from_isometry(ws, dim_i, dim_e, nb));
        if (fc <= f + 1e-13) break;
        ca = std::move(na);
        cb = std::move(nb);
        f = fc;
      }
      if (f > best.dmax_lower) {
        best.dmax_lower = f;
        best.psi_a = embed_sector(sector, ca, dim_f);
        best.psi_b = embed_sector(sector, cb, dim_f);
      }
    }
  }
  return best;
}

PivotResult pivot_radius(const HorizonModel& model, int samples, SeededRng& rng,
                         const std::vector<Vector>& seed_inputs) {
  if (samples < 2) throw std::invalid_argument("pivot_radius: samples must be >= 2");
  const Matrix w = model.stinespring();
  const Index dim_i = model.dim_i();
  const Index dim_e = model.dim_e();
  const Index dim_f = model.dim_f();

  // Frozen start set shared by every inner maximization: F basis, caller
  // seeds (dmax witnesses), and a fixed batch of Haar states. Later rounds
  // append their maximizers, so the set only grows.
  std::vector<Vector> starts;
  for (Index i = 0; i < dim_f; ++i) {
    Vector e = Vector::Zero(dim_f);
    e(i) = 1.0;
    starts.push_back(std::move(e));
  }
  for (const Vector& v : seed_inputs) {
    if (v.size() == dim_f && std::abs(v.norm() - 1.0) < 1e-9) starts.push_back(v);
  }
  const int inner_restarts = 8;
  SeededRng start_rng = rng.substream(0x52);
  for (int k = 0; k < inner_restarts; ++k) starts.push_back(haar_state(dim_f, start_rng));

  // Active set of exterior outputs; the pivot starts at their mean.
  std::vector<Matrix> active;
  SeededRng init_rng = rng.substream(0x51);
  Matrix sigma = Matrix::Zero(dim_e, dim_e);
  {
    const int warm = 4;
    for (int k = 0; k < warm; ++k) {
      Vector psi = haar_state(dim_f, init_rng);
      Matrix out = exterior_state_from_isometry(w, dim_i, dim_e, psi);
      active.push_back(out);
      sigma += out;
    }
    sigma /= static_cast<double>(warm);
  }
  for (const Vector& v : seed_inputs) {
    if (v.size() == dim_f && std::abs(v.norm() - 1.0) < 1e-9) {
      active.push_back(exterior_state_from_isometry(w, dim_i, dim_e, v));
    }
  }

  auto finite_radius = [&](const Matrix& s) {
    double g = 0.0;
    for (const Matrix& out : active) g = std::max(g, trace_distance(out, s));
    return g;
  };

  double trace_deficit = 0.0;
  auto consider = [&](const Matrix& cand, Matrix& best_sigma, double& best_g) {
    Matrix c = cand;
    const double tr = c.trace().real();
    if (std::abs(tr - 1.0) > tol::unit_trace) {
      if (tr <= 0.0) return;
      trace_deficit = std::max(trace_deficit, 1.0 - tr);
      c /= tr;
    }
    const double g = finite_radius(c);
    if (g < best_g) {
      best_g = g;
      best_sigma = std::move(c);
    }
  };

  // Lower bound on the true minimax: half the largest pairwise distance
  // among exterior outputs seen so far. Maintained incrementally.
  double half_diameter = 0.0;
  auto admit_output = [&](const Matrix& out) {
    for (const Matrix& existing : active) {
      half_diameter = std::max(half_diameter, 0.5 * trace_distance(existing, out));
    }
    active.push_back(out);
  };
  {
    std::vector<Matrix> initial;
    initial.swap(active);
    for (const Matrix& out : initial) admit_output(out);
  }

  double last_radius = -1.0;
  bool converged = false;
  auto gap_tolerance = [](double radius) { return std::max(1e-6, 0.01 * radius); };
  for (int round = 0; round < samples; ++round) {
    // Inner maximization at the current pivot (full frozen start set).
    InnerMax worst = inner_maximize(w, dim_i, dim_e, sigma, starts);
    last_radius = worst.value;
    admit_output(exterior_state_from_isometry(w, dim_i, dim_e, worst.psi));
    starts.push_back(worst.psi);
    if (last_radius - half_diameter <= gap_tolerance(last_radius)) {
      converged = true;
      break;
    }

    // Finite 1-center polish over the active set by projected subgradient,
    // keeping the best iterate rather than the last.
    Matrix cand = sigma;
    Matrix cand_best = sigma;
    double cand_best_g = finite_radius(sigma);
    for (int k = 0; k < 200; ++k) {
      std::size_t worst_idx = 0;
      double g = -1.0;
      for (std::size_t i = 0; i < active.size(); ++i) {
        const double gi = trace_distance(active[i], cand);
        if (gi > g) {
          g = gi;
          worst_idx = i;
        }
      }
      if (g < cand_best_g) {
        cand_best_g = g;
        cand_best = cand;
      }
      if (g <= half_diameter + 1e-12) break;
      const auto sg = hermitian_sign(active[worst_idx] - cand);
      // Polyak-style step toward the pairwise lower bound, damped.
      const double denom = 0.25 * sg.sign.squaredNorm();
      double eta = denom > 0.0 ? 0.7 * (g - half_diameter) / denom : 0.0;
      eta = std::min(eta, 0.5);
      if (eta <= 0.0) break;
      cand = density_projection(cand + eta * 0.5 * sg.sign);
    }

    // Candidate sweep: polished center, active-set mean, members, pure pivots.
    double best_g = finite_radius(sigma);
    Matrix best_sigma = sigma;
    consider(cand_best, best_sigma, best_g);
    Matrix mean = Matrix::Zero(dim_e, dim_e);
    for (const Matrix& out : active) mean += out;
    consider(mean / static_cast<double>(active.size()), best_sigma, best_g);
    for (const Matrix& out : active) consider(out, best_sigma, best_g);
    {
      Eigen::SelfAdjointEigenSolver<Matrix> es(best_sigma);
      Vector top = es.eigenvectors().col(dim_e - 1);
      consider(top * top.adjoint(), best_sigma, best_g);
    }
    sigma = best_sigma;
  }

  // Reported radius: exact inner max at the final pivot over the full set.
  // When the loop broke on a closed gap this repeats the winning evaluation.
  InnerMax final_eval = inner_maximize(w, dim_i, dim_e, sigma, starts);
  const double radius = std::max(final_eval.value, last_radius);

  PivotResult res;
  res.radius = radius;
  res.pivot = sigma;
  res.inner_restarts = static_cast<int>(starts.size());
  res.center_gap = radius - half_diameter;
  res.converged = converged && res.center_gap <= gap_tolerance(radius) + 1e-12;
  res.trace_deficit = trace_deficit;
  return res;
}

double fidelity_floor(const HorizonModel& model, int haar_samples, SeededRng& rng) {
  const Index dim_f = model.dim_f();
  double floor_val = 1.0;
  auto probe = [&](const Vector& psi) {
    floor_val = std::min(floor_val, interior_fidelity(model, psi));
  };
  for (Index i = 0; i < dim_f; ++i) {
    Vector e = Vector::Zero(dim_f);
    e(i) = 1.0;
    probe(e);
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex phases[4] = {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
  for (Index i = 0; i < dim_f; ++i) {
    for (Index j = i + 1; j < dim_f; ++j) {
      for (const Complex& ph : phases) {
        Vector v = Vector::Zero(dim_f);
        v(i) = inv_sqrt2;
        v(j) = ph * inv_sqrt2;
        probe(v);
      }
    }
  }
  SeededRng sub = rng.substream(0x71);
  for (int k = 0; k < haar_samples; ++k) probe(haar_state(dim_f, sub));
  return floor_val;
}

double lemma1_check(const HorizonModel& model, int pair_count, SeededRng& rng,
                    double epsilon_threshold, double tol) {
  EpsilonBracket eps = compute_epsilon(model, std::min(tol, epsilon_threshold));
  if (!(eps.upper <= epsilon_threshold)) {
    throw std::invalid_argument("lemma1_check: model is not ideal at the declared threshold");
  }
  const Matrix w = model.stinespring();
  const Index dim_i = model.dim_i();
  const Index dim_e = model.dim_e();
  const Index dim_f = model.dim_f();

  auto exterior = [&](const Vector& psi) {
    return exterior_state_from_isometry(w, dim_i, dim_e, psi);
  };

  double residual = 0.0;
  auto visit_pair = [&](const Vector& a, const Vector& b) {
    residual = std::max(residual, trace_distance(exterior(a), exterior(b)));
    if (std::abs(a.dot(b)) < 1e-3) {
      // Orthogonal pair: route through the equal superposition bridge.
      Vector plus = a + b;
      plus /= plus.norm();
      residual = std::max(residual, trace_distance(exterior(a), exterior(plus)));
      residual = std::max(residual, trace_distance(exterior(plus), exterior(b)));
    }
  };

  const auto sectors = charge_sectors(model);
  // Basis pairs per sector, including the orthogonal-bridge legs.
  for (const auto& [charge, sector] : sectors) {
    for (std::size_t i = 0; i < sector.size(); ++i) {
      for (std::size_t j = i + 1; j < sector.size(); ++j) {
        Vector a = Vector::Zero(dim_f), b = Vector::Zero(dim_f);
        a(sector[i]) = 1.0;
        b(sector[j]) = 1.0;
        visit_pair(a, b);
      }
    }
  }
  // Random same-sector pairs.
  std::vector<std::vector<Index>> usable;
  for (const auto& [charge, sector] : sectors) {
    if (sector.size() >= 2) usable.push_back(sector);
  }
  if (!usable.empty()) {
    SeededRng sub = rng.substream(0x91);
    for (int k = 0; k < pair_count; ++k) {
      const auto& sector = usable[k % usable.size()];
      const Index s = static_cast<Index>(sector.size());
      Vector ca = haar_state(s, sub);
      Vector cb = haar_state(s, sub);
      visit_pair(embed_sector(sector, ca, dim_f), embed_sector(sector, cb, dim_f));
    }
  }
  return residual;
}

TradeoffReport verify_tradeoff(const HorizonModel& model, const VerifyOptions& opts) {
  TradeoffReport rep;
  rep.rng = {opts.seed, opts.stream};

  DiamondOptions dopts;
  dopts.tol = opts.tol;
  dopts.restarts = opts.restarts;
  dopts.seed = opts.seed;
  dopts.stream = SeededRng::derive_stream(opts.stream, 1);
  EpsilonBracket eps = compute_epsilon(model, dopts);
  rep.epsilon_lower = eps.lower;
  rep.epsilon_upper = eps.upper;
  rep.epsilon_certified = eps.certified;

  SeededRng dmax_rng(opts.seed, SeededRng::derive_stream(opts.stream, 2));
  DmaxResult dmax = compute_dmax(model, opts.restarts, dmax_rng);
  rep.dmax_lower = dmax.dmax_lower;

  SeededRng pivot_rng(opts.seed, SeededRng::derive_stream(opts.stream, 3));
  PivotResult pivot =
      pivot_radius(model, opts.pivot_rounds, pivot_rng, {dmax.psi_a, dmax.psi_b});
  rep.pivot_radius = pivot.radius;
  rep.pivot_converged = pivot.converged;
  rep.pivot_trace_deficit = pivot.trace_deficit;

  SeededRng fid_rng(opts.seed, SeededRng::derive_stream(opts.stream, 4));
  rep.fidelity_floor = fidelity_floor(model, opts.samples, fid_rng);

  rep.bound_value = 2.0 * std::sqrt(2.0 * rep.epsilon_upper);
  rep.inequality_holds = rep.dmax_lower <= rep.bound_value + slack::inequality;
  rep.fvdg_holds = rep.epsilon_upper >= 1.0 - rep.fidelity_floor - slack::fvdg;
  rep.triangle_holds = rep.dmax_lower <= 2.0 * rep.pivot_radius + slack::pivot;
  rep.pivot_chain_holds =
      rep.pivot_radius <= std::sqrt(2.0 * rep.epsilon_upper) + slack::pivot;

  if (opts.lemma1_pairs > 0 && rep.epsilon_certified &&
      rep.epsilon_upper <= opts.lemma1_threshold) {
    SeededRng lemma_rng(opts.seed, SeededRng::derive_stream(opts.stream, 5));
    rep.lemma1_residual = lemma1_check(model, opts.lemma1_pairs, lemma_rng,
                                       opts.lemma1_threshold, opts.tol);
  }

  if (!rep.epsilon_certified) {
    rep.verdict = Verdict::indeterminate;
  } else {
    rep.verdict = rep.inequality_holds ? Verdict::pass : Verdict::fail;
  }
  return rep;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line: need at least two points");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return f;
}

ScalingFit scaling_fit(Family family, Index dim, const std::vector<double>& params,
                       double tol, int restarts, std::uint64_t seed,
                       std::uint64_t stream) {
  if (params.size() < 5) {
    throw std::invalid_argument("scaling_fit: need at least five parameter values");
  }
  ScalingFit fit;
  fit.family = family;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double p = params[i];
    ChannelFamilySpec spec{family, dim, p};
    HorizonModel model = embed_family_as_horizon(spec);

    DiamondOptions dopts;
    dopts.tol = tol;
    dopts.restarts = restarts;
    dopts.seed = seed;
    dopts.stream = SeededRng::derive_stream(stream, 0x1000 + i);
    EpsilonBracket eps = compute_epsilon(model, dopts);

    SeededRng dmax_rng(seed, SeededRng::derive_stream(stream, 0x2000 + i));
    DmaxResult dmax = compute_dmax(model, restarts, dmax_rng);

    ScalingPoint pt{p, eps.lower, eps.upper, dmax.dmax_lower, eps.certified};
    fit.points.push_back(pt);
    if (pt.certified && pt.eps_upper > 0.0 && pt.dmax_lower > 0.0) {
      lx.push_back(std::log(pt.eps_upper));
      ly.push_back(std::log(pt.dmax_lower));
    }
  }
  if (lx.size() < 5) {
    throw InsufficientCertifiedData("scaling_fit: fewer than five certified points");
  }
  LineFit line = fit_line(lx, ly);
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  fit.r_squared = line.r_squared;
  fit.fitted_points = static_cast<int>(lx.size());
  return fit;
}

}  // namespace nohair
