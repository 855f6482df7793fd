#include "nohair/metrics.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "nohair/random.hpp"

namespace nohair {

double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("trace_distance: dimension mismatch");
  }
  return 0.5 * trace_norm(a - b);
}

double trace_distance(const DensityOp& a, const DensityOp& b) {
  return trace_distance(a.matrix(), b.matrix());
}

double fidelity_to_pure(const Matrix& rho, const Vector& psi) {
  if (rho.rows() != psi.size() || rho.cols() != psi.size()) {
    throw std::invalid_argument("fidelity_to_pure: dimension mismatch");
  }
  const Complex val = psi.dot(rho * psi);
  return val.real();
}

double fidelity_to_pure(const DensityOp& rho, const PureStateVec& psi) {
  return fidelity_to_pure(rho.matrix(), psi.amplitudes());
}

FvdgRecord fvdg_check(const Matrix& rho, const Vector& psi) {
  const double f = fidelity_to_pure(rho, psi);
  const Matrix proj = psi * psi.adjoint();
  const double td = trace_distance(rho, proj);
  return {1.0 - f, td, (1.0 - f) <= td + 1e-9};
}

FvdgRecord fvdg_check(const DensityOp& rho, const PureStateVec& psi) {
  return fvdg_check(rho.matrix(), psi.amplitudes());
}

namespace {

// ---------------------------------------------------------------------------
// Variational witness side.
// ---------------------------------------------------------------------------

// (K (x) 1_ref) psi for psi on in (x) ref with ref minor.
Vector apply_kron_id(const Matrix& k, const Vector& psi, Index dref) {
  const Index dout = k.rows();
  const Index din = k.cols();
  Vector out(dout * dref);
  Eigen::Map<const Matrix> p(psi.data(), dref, din);
  Eigen::Map<Matrix> r(out.data(), dref, dout);
  r.noalias() = p * k.transpose();
  return out;
}

struct ChannelPairData {
  std::vector<Matrix> ka, kb;
  std::vector<Matrix> ka_dag, kb_dag;
  Index din, dout;
};

ChannelPairData pair_data(const Channel& a, const Channel& b) {
  ChannelPairData d;
  d.ka = a.kraus();
  d.kb = b.kraus();
  for (const auto& k : d.ka) d.ka_dag.push_back(k.adjoint());
  for (const auto& k : d.kb) d.kb_dag.push_back(k.adjoint());
  d.din = a.dim_in();
  d.dout = a.dim_out();
  return d;
}

// ((a - b) (x) id_ref)(|psi><psi|) as a dense Hermitian matrix.
Matrix difference_output(const ChannelPairData& d, const Vector& psi, Index dref) {
  const Index dim = d.dout * dref;
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& k : d.ka) {
    Vector x = apply_kron_id(k, psi, dref);
    m.noalias() += x * x.adjoint();
  }
  for (const auto& k : d.kb) {
    Vector x = apply_kron_id(k, psi, dref);
    m.noalias() -= x * x.adjoint();
  }
  return m;
}

double witness_value(const ChannelPairData& d, const Vector& psi, Index dref) {
  return 0.5 * hermitian_sign(difference_output(d, psi, dref)).trace_norm;
}

// Wirtinger gradient of the witness objective at fixed sign operator S.
Vector witness_gradient(const ChannelPairData& d, const Vector& psi, Index dref,
                        const Matrix& s) {
  Vector g = Vector::Zero(psi.size());
  for (std::size_t k = 0; k < d.ka.size(); ++k) {
    Vector x = apply_kron_id(d.ka[k], psi, dref);
    g += apply_kron_id(d.ka_dag[k], s * x, dref);
  }
  for (std::size_t k = 0; k < d.kb.size(); ++k) {
    Vector x = apply_kron_id(d.kb[k], psi, dref);
    g -= apply_kron_id(d.kb_dag[k], s * x, dref);
  }
  return g;
}

struct AscentResult {
  double value = 0.0;
  Vector psi;
};

// Projected-gradient ascent on the unit sphere with step halving; stops when
// the relative improvement over a 50-step window drops below 1e-10.
AscentResult ascend_witness(const ChannelPairData& d, Vector psi, Index dref,
                            int max_iters) {
  double f = witness_value(d, psi, dref);
  double eta = 1.0;
  int stale = 0;
  double window_best = f;
  for (int it = 0; it < max_iters; ++it) {
    const auto sg = hermitian_sign(difference_output(d, psi, dref));
    Vector g = witness_gradient(d, psi, dref, sg.sign);
    g -= psi * psi.dot(g);  // tangent projection
    const double gnorm = g.norm();
    if (gnorm < 1e-14) break;

    bool accepted = false;
    for (int h = 0; h < 40; ++h) {
      Vector cand = psi + eta * g;
      cand /= cand.norm();
      const double fc = witness_value(d, cand, dref);
      if (fc > f) {
        psi = std::move(cand);
        f = fc;
        eta = std::min(eta * 1.25, 1e3);
        accepted = true;
        break;
      }
      eta *= 0.5;
    }
    if (!accepted) break;

    if (++stale >= 50) {
      if (f - window_best < 1e-10 * std::max(1.0, f)) break;
      window_best = f;
      stale = 0;
    }
  }
  return {f, std::move(psi)};
}

AscentResult multi_start_witness(const ChannelPairData& d, Index dref, int restarts,
                                 int max_iters, SeededRng rng) {
  AscentResult best;
  best.psi = Vector::Zero(d.din * dref);
  best.psi(0) = 1.0;
  for (int r = 0; r < restarts; ++r) {
    Vector start;
    if (r == 0 && dref == d.din) {
      // Maximally entangled start.
      start = Vector::Zero(d.din * dref);
      for (Index i = 0; i < d.din; ++i) start(i * dref + i) = 1.0;
      start /= start.norm();
    } else {
      SeededRng sub = rng.substream(static_cast<std::uint64_t>(r) + 1);
      start = haar_state(d.din * dref, sub);
    }
    AscentResult res = ascend_witness(d, std::move(start), dref, max_iters);
    if (res.value > best.value) best = std::move(res);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Certified upper bound: operator-splitting solve of the completely bounded
// trace-norm program on the Choi difference J.
//
// Dual form solved here: minimize ||Tr_out Y||_inf over Hermitian Y with
// Y >= J and Y >= -J. Any Hermitian Y repaired by a spectral shift gives a
// valid bound, so certificates are extracted from the iterates; the splitting
// alternates a closed-form solve of the marginal-extension normal equations
// with projections onto the PSD blocks.
// ---------------------------------------------------------------------------

struct SplitState {
  double t = 0.0;
  Matrix y;              // Hermitian on out (x) in
  Matrix s1, s2, s3;     // PSD slacks: y - J, y + J, t 1 - Tr_out y
  Matrix x1, x2, x3;     // multipliers
};

struct CertifiedUpper {
  double upper_half = 0.0;
  long iters = 0;
};

Matrix lift_in(const Matrix& g, Index dout) {
  return tensor_product(Matrix::Identity(dout, dout), g);
}

// Repair the current Y to dual feasibility and return the certified bound.
double repair_certificate(const Matrix& y, const Matrix& j, Index dout, Index din) {
  const double d1 = min_eigenvalue(y - j);
  const double d2 = min_eigenvalue(y + j);
  const double shift = std::max({0.0, -d1, -d2});
  Matrix m = partial_trace(y, {dout, din}, {1});
  const double top = max_eigenvalue(m) + static_cast<double>(dout) * shift;
  return 0.5 * std::max(0.0, top);
}

CertifiedUpper certified_upper(const Matrix& j, Index dout, Index din, double lower,
                               double tol, long max_iters, double relax) {
  const Index dim = dout * din;
  SplitState st;
  {
    Eigen::SelfAdjointEigenSolver<Matrix> es(j);
    st.y = es.eigenvectors() * es.eigenvalues().cwiseAbs().asDiagonal() *
           es.eigenvectors().adjoint();
  }
  Matrix trout_y = partial_trace(st.y, {dout, din}, {1});
  st.t = max_eigenvalue(trout_y);
  st.s1 = st.y - j;
  st.s2 = st.y + j;
  st.s3 = st.t * Matrix::Identity(din, din) - trout_y;
  st.x1 = Matrix::Zero(dim, dim);
  st.x2 = Matrix::Zero(dim, dim);
  st.x3 = Matrix::Zero(din, din);

  double mu = std::max(1e-6, j.norm());
  double best = repair_certificate(st.y, j, dout, din);
  if (best - lower <= tol) return {best, 0};

  const Matrix c1 = -j;
  const Matrix c2 = j;
  const Matrix c3 = Matrix::Zero(din, din);

  long it = 0;
  for (; it < max_iters; ++it) {
    // Normal-equation solve for (t, Y).
    const double rhs_t = (-1.0 + st.x3.trace().real()) / mu + st.s3.trace().real();
    Matrix rhs_y = (st.x1 + st.x2 - lift_in(st.x3, dout)) / mu + st.s1 + st.s2 -
                   lift_in(st.s3, dout);
    Matrix h = partial_trace(rhs_y, {dout, din}, {1}) / static_cast<double>(dout);
    Matrix wp = rhs_y - lift_in(h, dout);
    const double tr_g = 0.5 * (h.trace().real() + rhs_t);
    st.t = (rhs_t + static_cast<double>(dout) * tr_g) / static_cast<double>(din);
    Matrix g = (h + st.t * Matrix::Identity(din, din)) / (2.0 + static_cast<double>(dout));
    st.y = 0.5 * wp + lift_in(g, dout);

    trout_y = partial_trace(st.y, {dout, din}, {1});
    const Matrix q1 = -st.y;
    const Matrix q2 = -st.y;
    const Matrix q3 = trout_y - st.t * Matrix::Identity(din, din);

    const Matrix r1 = relax * q1 + (1.0 - relax) * (c1 - st.s1);
    const Matrix r2 = relax * q2 + (1.0 - relax) * (c2 - st.s2);
    const Matrix r3 = relax * q3 + (1.0 - relax) * (c3 - st.s3);

    const Matrix s1_prev = st.s1, s2_prev = st.s2, s3_prev = st.s3;
    st.s1 = psd_projection(c1 - r1 - st.x1 / mu);
    st.s2 = psd_projection(c2 - r2 - st.x2 / mu);
    st.s3 = psd_projection(c3 - r3 - st.x3 / mu);

    st.x1 += mu * (r1 + st.s1 - c1);
    st.x2 += mu * (r2 + st.s2 - c2);
    st.x3 += mu * (r3 + st.s3 - c3);

    if ((it + 1) % 25 == 0 || it + 1 == max_iters) {
      best = std::min(best, repair_certificate(st.y, j, dout, din));
      if (best - lower <= tol) {
        ++it;
        break;
      }
    }
    if ((it + 1) % 50 == 0) {
      const double pri = std::sqrt((q1 + st.s1 - c1).squaredNorm() +
                                   (q2 + st.s2 - c2).squaredNorm() +
                                   (q3 + st.s3 - c3).squaredNorm());
      const Matrix ds_y = -(st.s1 - s1_prev) - (st.s2 - s2_prev) +
                          lift_in(st.s3 - s3_prev, dout);
      const double dua =
          mu * std::sqrt(ds_y.squaredNorm() + std::pow((st.s3 - s3_prev).trace().real(), 2));
      if (pri > 10.0 * dua) {
        mu = std::min(mu * 2.0, 1e8);
      } else if (dua > 10.0 * pri) {
        mu = std::max(mu * 0.5, 1e-8);
      }
      if (pri < 1e-13 && dua < 1e-13) {
        best = std::min(best, repair_certificate(st.y, j, dout, din));
        ++it;
        break;
      }
    }
  }
  return {best, it};
}

}  // namespace

DiamondResult diamond_distance(const Channel& a, const Channel& b, double tol) {
  DiamondOptions opts;
  opts.tol = tol;
  return diamond_distance(a, b, opts);
}

DiamondResult diamond_distance(const Channel& a, const Channel& b,
                               const DiamondOptions& opts) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw std::invalid_argument("diamond_distance: dimension mismatch");
  }
  if (opts.tol <= 0.0) throw std::invalid_argument("diamond_distance: tol must be positive");

  const ChannelPairData d = pair_data(a, b);
  const Index dref = d.din;

  SeededRng rng(opts.seed, opts.stream);
  AscentResult lower =
      multi_start_witness(d, dref, opts.restarts, opts.max_ascent_iters, rng);

  Matrix j = hermitize(a.choi() - b.choi(), 1e-10);
  CertifiedUpper up = certified_upper(j, d.dout, d.din, lower.value, opts.tol,
                                      opts.max_solver_iters, opts.relaxation);

  DiamondResult res;
  res.lower = lower.value;
  res.upper = std::max(up.upper_half, lower.value - 1e-12);
  res.gap = res.upper - res.lower;
  res.certified = res.gap <= opts.tol;
  res.witness = std::move(lower.psi);
  res.solver_iters = up.iters;
  return res;
}

SeparableWitness best_separable_witness(const Channel& a, const Channel& b,
                                        int restarts, SeededRng& rng) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw std::invalid_argument("best_separable_witness: dimension mismatch");
  }
  const ChannelPairData d = pair_data(a, b);
  AscentResult best = multi_start_witness(d, 1, restarts, 5000, rng.substream(0xb57));
  return {best.value, std::move(best.psi)};
}

double diamond_sampling_lower(const Channel& a, const Channel& b, long samples,
                              SeededRng& rng) {
  const ChannelPairData d = pair_data(a, b);
  const Index dref = d.din;
  double best = 0.0;
  for (long s = 0; s < samples; ++s) {
    Vector psi = haar_state(d.din * dref, rng);
    best = std::max(best, witness_value(d, psi, dref));
  }
  return best;
}

}  // namespace nohair
