#include "nohair/channel.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nohair {

namespace {

constexpr double kKrausNormCut = 1e-12;   // drop operators below this norm
constexpr double kChoiRankCut = 1e-13;    // relative eigenvalue cut on Choi spectra

std::vector<Matrix> prune_kraus(std::vector<Matrix> ops) {
  std::vector<Matrix> kept;
  kept.reserve(ops.size());
  for (auto& k : ops) {
    if (k.norm() > kKrausNormCut) kept.push_back(std::move(k));
  }
  return kept;
}

void check_kraus_complete(const std::vector<Matrix>& ops) {
  if (ops.empty()) throw std::invalid_argument("channel: empty Kraus set");
  const Index din = ops.front().cols();
  const Index dout = ops.front().rows();
  Matrix acc = Matrix::Zero(din, din);
  for (const auto& k : ops) {
    if (k.rows() != dout || k.cols() != din) {
      throw std::invalid_argument("channel: inconsistent Kraus shapes");
    }
    acc += k.adjoint() * k;
  }
  acc -= Matrix::Identity(din, din);
  if (acc.cwiseAbs().maxCoeff() > tol::kraus_complete) {
    throw std::invalid_argument("channel: Kraus set is not trace preserving");
  }
}

}  // namespace

Vector vec_rowmajor(const Matrix& m) {
  Vector v(m.rows() * m.cols());
  for (Index a = 0; a < m.rows(); ++a) {
    for (Index i = 0; i < m.cols(); ++i) {
      v(a * m.cols() + i) = m(a, i);
    }
  }
  return v;
}

Matrix unvec_rowmajor(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("unvec: size mismatch");
  Matrix m(rows, cols);
  for (Index a = 0; a < rows; ++a) {
    for (Index i = 0; i < cols; ++i) {
      m(a, i) = v(a * cols + i);
    }
  }
  return m;
}

Channel Channel::from_kraus(std::vector<Matrix> kraus) {
  kraus = prune_kraus(std::move(kraus));
  check_kraus_complete(kraus);
  Channel c;
  c.rep_ = ChannelRep::Kraus;
  c.dim_out_ = kraus.front().rows();
  c.dim_in_ = kraus.front().cols();
  c.dim_env_ = static_cast<Index>(kraus.size());
  c.kraus_ = std::move(kraus);
  return c;
}

Channel Channel::from_choi(Matrix choi, Index dim_out, Index dim_in) {
  if (choi.rows() != choi.cols() || choi.rows() != dim_out * dim_in) {
    throw std::invalid_argument("channel: Choi shape mismatch");
  }
  choi = hermitize(choi, 1e-10);
  const double min_eig = min_eigenvalue(choi);
  if (min_eig < tol::eigen_floor) {
    throw std::invalid_argument("channel: Choi matrix is not positive semidefinite");
  }
  Matrix marginal = partial_trace(choi, {dim_out, dim_in}, {1});
  marginal -= Matrix::Identity(dim_in, dim_in);
  if (marginal.cwiseAbs().maxCoeff() > tol::kraus_complete) {
    throw std::invalid_argument("channel: Choi input marginal is not the identity");
  }
  Channel c;
  c.rep_ = ChannelRep::Choi;
  c.dim_out_ = dim_out;
  c.dim_in_ = dim_in;
  c.dim_env_ = 0;  // determined on conversion
  c.payload_ = std::move(choi);
  return c;
}

Channel Channel::from_stinespring(Matrix w, Index dim_out, Index dim_env) {
  if (dim_out < 1 || dim_env < 1 || w.rows() != dim_out * dim_env) {
    throw std::invalid_argument("channel: Stinespring shape mismatch");
  }
  Matrix gram = w.adjoint() * w;
  gram -= Matrix::Identity(w.cols(), w.cols());
  if (gram.cwiseAbs().maxCoeff() > tol::isometry) {
    throw std::invalid_argument("channel: Stinespring map is not an isometry");
  }
  Channel c;
  c.rep_ = ChannelRep::Stinespring;
  c.dim_out_ = dim_out;
  c.dim_in_ = w.cols();
  c.dim_env_ = dim_env;
  c.payload_ = std::move(w);
  return c;
}

Index Channel::dim_env() const {
  if (dim_env_ > 0) return dim_env_;
  return static_cast<Index>(kraus().size());
}

std::vector<Matrix> Channel::kraus() const {
  switch (rep_) {
    case ChannelRep::Kraus:
      return kraus_;
    case ChannelRep::Stinespring: {
      std::vector<Matrix> ops;
      ops.reserve(static_cast<std::size_t>(dim_env_));
      for (Index k = 0; k < dim_env_; ++k) {
        Matrix kk(dim_out_, dim_in_);
        for (Index a = 0; a < dim_out_; ++a) {
          kk.row(a) = payload_.row(a * dim_env_ + k);
        }
        ops.push_back(std::move(kk));
      }
      return prune_kraus(std::move(ops));
    }
    case ChannelRep::Choi: {
      Eigen::SelfAdjointEigenSolver<Matrix> es(payload_);
      const RealVector& ev = es.eigenvalues();
      const double cut = std::max(kKrausNormCut * kKrausNormCut,
                                  kChoiRankCut * std::max(0.0, ev.maxCoeff()));
      std::vector<Matrix> ops;
      for (Index k = ev.size() - 1; k >= 0; --k) {  // descending eigenvalues
        if (ev(k) <= cut) continue;
        Vector col = std::sqrt(ev(k)) * es.eigenvectors().col(k);
        ops.push_back(unvec_rowmajor(col, dim_out_, dim_in_));
      }
      return ops;
    }
  }
  throw std::logic_error("channel: bad representation tag");
}

Matrix Channel::choi() const {
  if (rep_ == ChannelRep::Choi) return payload_;
  Matrix j = Matrix::Zero(dim_out_ * dim_in_, dim_out_ * dim_in_);
  for (const Matrix& k : kraus()) {
    Vector v = vec_rowmajor(k);
    j.noalias() += v * v.adjoint();
  }
  return j;
}

Matrix Channel::stinespring() const {
  if (rep_ == ChannelRep::Stinespring) return payload_;
  const std::vector<Matrix> ops = kraus();
  const Index env = static_cast<Index>(ops.size());
  Matrix w = Matrix::Zero(dim_out_ * env, dim_in_);
  for (Index k = 0; k < env; ++k) {
    for (Index a = 0; a < dim_out_; ++a) {
      w.row(a * env + k) = ops[static_cast<std::size_t>(k)].row(a);
    }
  }
  return w;
}

Matrix Channel::apply(const Matrix& rho) const {
  if (rho.rows() != dim_in_ || rho.cols() != dim_in_) {
    throw std::invalid_argument("channel: input dimension mismatch");
  }
  Matrix out = Matrix::Zero(dim_out_, dim_out_);
  for (const Matrix& k : kraus()) {
    out.noalias() += k * rho * k.adjoint();
  }
  return out;
}

Channel::CptpDefect Channel::cptp_defect() const {
  CptpDefect d{};
  Matrix acc = Matrix::Zero(dim_in_, dim_in_);
  for (const Matrix& k : kraus()) acc += k.adjoint() * k;
  d.completeness = (acc - Matrix::Identity(dim_in_, dim_in_)).cwiseAbs().maxCoeff();
  Matrix j = choi();
  d.choi_min_eig = min_eigenvalue(j);
  Matrix marginal = partial_trace(j, {dim_out_, dim_in_}, {1});
  d.marginal = (marginal - Matrix::Identity(dim_in_, dim_in_)).cwiseAbs().maxCoeff();
  return d;
}

Channel complementary_channel(const Channel& c) {
  Matrix w = c.stinespring();
  const Index dout = c.dim_out();
  const Index denv = w.rows() / dout;
  // Kraus operators of the environment-side map, indexed by the out basis:
  // Ktilde_a[k, i] = W[(a,k), i].
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(dout));
  for (Index a = 0; a < dout; ++a) {
    ops.push_back(w.middleRows(a * denv, denv));
  }
  return Channel::from_kraus(std::move(ops));
}

double choi_state_distance(const Channel& a, const Channel& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw std::invalid_argument("choi_state_distance: dimension mismatch");
  }
  Matrix diff = (a.choi() - b.choi()) / static_cast<double>(a.dim_in());
  return 0.5 * trace_norm(diff);
}

IsometricEmbedding::IsometricEmbedding(Matrix v) : v_(std::move(v)) {
  if (v_.rows() < v_.cols() || v_.cols() < 1) {
    throw std::invalid_argument("embedding: codomain smaller than domain");
  }
  Matrix gram = v_.adjoint() * v_;
  gram -= Matrix::Identity(v_.cols(), v_.cols());
  if (gram.cwiseAbs().maxCoeff() > tol::isometry) {
    throw std::invalid_argument("embedding: V^dag V deviates from identity");
  }
}

IsometricEmbedding IsometricEmbedding::identity(Index dim) {
  return IsometricEmbedding(Matrix::Identity(dim, dim));
}

Channel ideal_infall(const IsometricEmbedding& v, Index env_dim) {
  if (env_dim < 1) throw std::invalid_argument("ideal_infall: env_dim must be >= 1");
  const Index dout = v.dim_codomain();
  const Index din = v.dim_domain();
  Matrix w = Matrix::Zero(dout * env_dim, din);
  for (Index a = 0; a < dout; ++a) {
    w.row(a * env_dim) = v.matrix().row(a);  // environment vector |0>
  }
  return Channel::from_stinespring(std::move(w), dout, env_dim);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::depolarizing: return "depolarizing";
    case Family::dephasing: return "dephasing";
    case Family::amplitude_damping: return "amplitude_damping";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "depolarizing") return Family::depolarizing;
  if (name == "dephasing") return Family::dephasing;
  if (name == "amplitude_damping") return Family::amplitude_damping;
  throw std::invalid_argument("unknown channel family: " + name);
}

void ChannelFamilySpec::validate() const {
  if (dim < 1) throw std::invalid_argument("family: dim must be >= 1");
  if (param < 0.0 || param > 1.0) throw std::invalid_argument("family: param outside [0, 1]");
  if (family == Family::amplitude_damping && dim != 2) {
    throw std::invalid_argument("family: amplitude damping requires dim = 2");
  }
}

Channel make_family(const ChannelFamilySpec& spec) {
  spec.validate();
  const Index d = spec.dim;
  const double p = spec.param;
  std::vector<Matrix> ops;
  switch (spec.family) {
    case Family::depolarizing: {
      // Weyl form: (1-p) rho + (p/d^2) sum_ab W_ab rho W_ab^dag = (1-p) rho + p 1/d.
      const Complex omega = std::exp(Complex(0.0, 2.0 * std::numbers::pi / static_cast<double>(d)));
      for (Index a = 0; a < d; ++a) {
        for (Index b = 0; b < d; ++b) {
          Matrix w = Matrix::Zero(d, d);
          for (Index j = 0; j < d; ++j) {
            w((j + a) % d, j) = std::pow(omega, static_cast<double>(b * j));
          }
          const double coeff = (a == 0 && b == 0)
                                   ? std::sqrt(1.0 - p + p / static_cast<double>(d * d))
                                   : std::sqrt(p) / static_cast<double>(d);
          ops.push_back(coeff * w);
        }
      }
      break;
    }
    case Family::dephasing: {
      ops.push_back(std::sqrt(1.0 - p) * Matrix::Identity(d, d));
      for (Index k = 0; k < d; ++k) {
        Matrix proj = Matrix::Zero(d, d);
        proj(k, k) = std::sqrt(p);
        ops.push_back(std::move(proj));
      }
      break;
    }
    case Family::amplitude_damping: {
      Matrix k0 = Matrix::Zero(2, 2);
      k0(0, 0) = 1.0;
      k0(1, 1) = std::sqrt(1.0 - p);
      Matrix k1 = Matrix::Zero(2, 2);
      k1(0, 1) = std::sqrt(p);
      ops.push_back(std::move(k0));
      ops.push_back(std::move(k1));
      break;
    }
  }
  return Channel::from_kraus(std::move(ops));
}

}  // namespace nohair
