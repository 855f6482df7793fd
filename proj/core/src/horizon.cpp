#include "nohair/horizon.hpp"

#include <cmath>
#include <stdexcept>

namespace nohair {

HorizonModel::HorizonModel(Matrix u, Vector phi0, SubsystemLayout output_layout,
                           IsometricEmbedding v, std::vector<int> charges)
    : u_(std::move(u)),
      phi0_(std::move(phi0)),
      layout_(std::move(output_layout)),
      v_(std::move(v)),
      charges_(std::move(charges)) {
  if (layout_.factor_count() != 2 || layout_.role_of(0) != Role::I ||
      layout_.role_of(1) != Role::E) {
    throw std::invalid_argument("HorizonModel: output layout must be [I, E]");
  }
  if (u_.rows() != u_.cols()) throw std::invalid_argument("HorizonModel: U not square");
  Matrix gram = u_.adjoint() * u_;
  gram -= Matrix::Identity(u_.rows(), u_.rows());
  if (gram.cwiseAbs().maxCoeff() > tol::unitarity) {
    throw std::invalid_argument("HorizonModel: U is not unitary");
  }
  if (std::abs(phi0_.norm() - 1.0) > tol::unit_norm) {
    throw std::invalid_argument("HorizonModel: Phi0 not normalized");
  }
  if (charges_.empty()) throw std::invalid_argument("HorizonModel: no charge labels");
  const Index df = static_cast<Index>(charges_.size());
  if (df * phi0_.size() != layout_.total_dim() || u_.rows() != layout_.total_dim()) {
    throw std::invalid_argument("HorizonModel: dim(F) dim(BH) != dim(I) dim(E)");
  }
  if (v_.dim_domain() != df || v_.dim_codomain() != layout_.dim(0)) {
    throw std::invalid_argument("HorizonModel: embedding dimensions mismatch");
  }
}

Matrix HorizonModel::stinespring() const {
  const Index df = dim_f();
  const Index dbh = dim_bh();
  Matrix w(u_.rows(), df);
  Vector in = Vector::Zero(u_.rows());
  for (Index i = 0; i < df; ++i) {
    in.setZero();
    in.segment(i * dbh, dbh) = phi0_;
    w.col(i) = u_ * in;
  }
  return w;
}

HorizonModel HorizonModel::with_embedding(IsometricEmbedding v) const {
  return HorizonModel(u_, phi0_, layout_, std::move(v), charges_);
}

HorizonModel HorizonModel::with_charges(std::vector<int> charges) const {
  return HorizonModel(u_, phi0_, layout_, v_, std::move(charges));
}

Channel interior_channel(const HorizonModel& model) {
  return Channel::from_stinespring(model.stinespring(), model.dim_i(), model.dim_e());
}

Channel exterior_channel(const HorizonModel& model) {
  return complementary_channel(interior_channel(model));
}

Matrix exterior_state_from_isometry(const Matrix& w, Index dim_i, Index dim_e,
                                    const Vector& psi) {
  if (w.cols() != psi.size()) throw std::invalid_argument("exterior_state: dimension mismatch");
  Vector v = w * psi;
  Matrix rho = Matrix::Zero(dim_e, dim_e);
  for (Index a = 0; a < dim_i; ++a) {
    const auto block = v.segment(a * dim_e, dim_e);
    rho.noalias() += block * block.adjoint();
  }
  return rho;
}

Matrix interior_state_from_isometry(const Matrix& w, Index dim_i, Index dim_e,
                                    const Vector& psi) {
  if (w.cols() != psi.size()) throw std::invalid_argument("interior_state: dimension mismatch");
  Vector v = w * psi;
  Matrix rho = Matrix::Zero(dim_i, dim_i);
  for (Index a = 0; a < dim_i; ++a) {
    for (Index b = 0; b < dim_i; ++b) {
      rho(a, b) = v.segment(a * dim_e, dim_e).dot(v.segment(b * dim_e, dim_e));
    }
  }
  // dot() conjugates the left argument, so rho(a,b) = <v_b, v_a>; transpose.
  return rho.transpose();
}

Matrix exterior_state(const HorizonModel& model, const Vector& psi) {
  return exterior_state_from_isometry(model.stinespring(), model.dim_i(), model.dim_e(), psi);
}

Matrix interior_state(const HorizonModel& model, const Vector& psi) {
  return interior_state_from_isometry(model.stinespring(), model.dim_i(), model.dim_e(), psi);
}

std::map<int, std::vector<Index>> charge_sectors(const HorizonModel& model) {
  std::map<int, std::vector<Index>> sectors;
  const auto& charges = model.charges();
  for (Index i = 0; i < static_cast<Index>(charges.size()); ++i) {
    sectors[charges[static_cast<std::size_t>(i)]].push_back(i);
  }
  return sectors;
}

namespace {

SubsystemLayout output_split(Index dim_i, Index dim_e) {
  return SubsystemLayout({dim_i, dim_e}, {{0, Role::I}, {1, Role::E}});
}

}  // namespace

HorizonModel embed_family_as_horizon(const ChannelFamilySpec& spec) {
  spec.validate();
  Channel chan = make_family(spec);
  Matrix w = chan.stinespring();
  const Index d = chan.dim_in();
  const Index env = chan.dim_env();
  // Input ordering (f, bh) with bh minor: the column of U at (i, 0) is W|i>.
  std::vector<Index> positions;
  positions.reserve(static_cast<std::size_t>(d));
  for (Index i = 0; i < d; ++i) positions.push_back(i * env);
  Matrix u = complete_to_unitary(w, positions);
  Vector phi0 = Vector::Zero(env);
  phi0(0) = 1.0;
  return HorizonModel(std::move(u), std::move(phi0), output_split(d, env),
                      IsometricEmbedding::identity(d), std::vector<int>(static_cast<std::size_t>(d), 0));
}

HorizonModel random_horizon_model(Index dim_f, Index dim_bh, SeededRng& rng) {
  Matrix u = haar_unitary(dim_f * dim_bh, rng);
  Vector phi0 = haar_state(dim_bh, rng);
  return HorizonModel(std::move(u), std::move(phi0), output_split(dim_f, dim_bh),
                      IsometricEmbedding::identity(dim_f),
                      std::vector<int>(static_cast<std::size_t>(dim_f), 0));
}

HorizonModel make_ideal_model(Index dim_f, Index dim_bh, Index dim_i, SeededRng& rng) {
  const Index total = dim_f * dim_bh;
  if (dim_i < dim_f || total % dim_i != 0) {
    throw std::invalid_argument("make_ideal_model: invalid interior dimension");
  }
  const Index dim_e = total / dim_i;
  Matrix v = haar_isometry(dim_i, dim_f, rng);
  Vector chi = haar_state(dim_e, rng);
  Vector phi0 = haar_state(dim_bh, rng);

  // U maps the orthonormal set {|i> (x) phi0} onto {V|i> (x) chi}; both sets
  // are completed to full bases and U is the basis change between them.
  Matrix in_fixed(total, dim_f);
  Matrix out_fixed(total, dim_f);
  for (Index i = 0; i < dim_f; ++i) {
    Vector a = Vector::Zero(total);
    a.segment(i * dim_bh, dim_bh) = phi0;
    in_fixed.col(i) = a;
    out_fixed.col(i) = tensor_product(Vector(v.col(i)), chi);
  }
  std::vector<Index> head(static_cast<std::size_t>(dim_f));
  for (Index i = 0; i < dim_f; ++i) head[static_cast<std::size_t>(i)] = i;
  Matrix basis_in = complete_to_unitary(in_fixed, head);
  Matrix basis_out = complete_to_unitary(out_fixed, head);
  Matrix u = basis_out * basis_in.adjoint();

  return HorizonModel(std::move(u), std::move(phi0), output_split(dim_i, dim_e),
                      IsometricEmbedding(std::move(v)),
                      std::vector<int>(static_cast<std::size_t>(dim_f), 0));
}

HorizonModel make_ideal_model_exact(Index dim_f, Index dim_bh) {
  Matrix u = Matrix::Identity(dim_f * dim_bh, dim_f * dim_bh);
  Vector phi0 = Vector::Zero(dim_bh);
  phi0(0) = 1.0;
  return HorizonModel(std::move(u), std::move(phi0), output_split(dim_f, dim_bh),
                      IsometricEmbedding::identity(dim_f),
                      std::vector<int>(static_cast<std::size_t>(dim_f), 0));
}

HorizonModel make_swap_model() {
  Matrix u = Matrix::Zero(4, 4);
  // (f, b) -> (b, f)
  for (Index f = 0; f < 2; ++f) {
    for (Index b = 0; b < 2; ++b) {
      u(b * 2 + f, f * 2 + b) = 1.0;
    }
  }
  Vector phi0 = Vector::Zero(2);
  phi0(0) = 1.0;
  return HorizonModel(std::move(u), std::move(phi0), output_split(2, 2),
                      IsometricEmbedding::identity(2), {0, 0});
}

}  // namespace nohair
