#pragma once

#include <string>
#include <vector>

#include "nohair/linalg.hpp"
#include "nohair/types.hpp"

namespace nohair {

enum class ChannelRep { Kraus, Choi, Stinespring };

/// Completely positive trace-preserving map between finite-dimensional
/// spaces, held in one of three interconvertible representations.
///
/// Conventions, fixed once:
///  - Kraus operators are dim_out x dim_in; action rho -> sum_k K rho K^dag.
///  - The Choi matrix lives on out (x) in:  J = sum_ij N(E_ij) (x) E_ij,
///    so J >= 0 and Tr_out J = 1_in characterize CPTP.
///  - A Stinespring isometry W maps in -> out (x) env with the environment
///    index minor: W[(a,k), i] = K_k(a, i).
/// Conversions return fresh values and cache nothing.
class Channel {
 public:
  static Channel from_kraus(std::vector<Matrix> kraus);
  static Channel from_choi(Matrix choi, Index dim_out, Index dim_in);
  static Channel from_stinespring(Matrix w, Index dim_out, Index dim_env);

  ChannelRep rep() const { return rep_; }
  Index dim_in() const { return dim_in_; }
  Index dim_out() const { return dim_out_; }
  /// Environment dimension of the held/derived Stinespring dilation.
  Index dim_env() const;

  /// Representation conversions (always recomputed).
  std::vector<Matrix> kraus() const;
  Matrix choi() const;
  Matrix stinespring() const;

  Matrix apply(const Matrix& rho) const;

  struct CptpDefect {
    double completeness;   // |sum K^dag K - 1|_max
    double choi_min_eig;   // smallest Choi eigenvalue
    double marginal;       // |Tr_out J - 1|_max
  };
  CptpDefect cptp_defect() const;

 private:
  Channel() = default;
  ChannelRep rep_ = ChannelRep::Kraus;
  std::vector<Matrix> kraus_;  // Kraus rep
  Matrix payload_;             // Choi or Stinespring rep
  Index dim_in_ = 0, dim_out_ = 0, dim_env_ = 0;
};

/// Row-major vectorization matching the Choi convention.
Vector vec_rowmajor(const Matrix& m);
Matrix unvec_rowmajor(const Vector& v, Index rows, Index cols);

/// Environment-side channel of a Stinespring dilation:
/// rho -> Tr_out[W rho W^dag]. For an isometric channel dilated with a fixed
/// environment vector this is the constant map rho -> |sigma><sigma|.
Channel complementary_channel(const Channel& c);

/// Trace distance between the normalized Choi states J/dim_in.
double choi_state_distance(const Channel& a, const Channel& b);

/// Isometric embedding V: H_F -> H_I with V^dag V = 1.
class IsometricEmbedding {
 public:
  explicit IsometricEmbedding(Matrix v);
  const Matrix& matrix() const { return v_; }
  Index dim_domain() const { return v_.cols(); }
  Index dim_codomain() const { return v_.rows(); }
  static IsometricEmbedding identity(Index dim);

 private:
  Matrix v_;
};

/// Ad_V as a channel, dilated with the fixed environment vector |0> on an
/// environment of dimension env_dim, so its complementary channel is the
/// constant map onto |0><0|.
Channel ideal_infall(const IsometricEmbedding& v, Index env_dim = 1);

enum class Family { depolarizing, dephasing, amplitude_damping };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct ChannelFamilySpec {
  Family family;
  Index dim;     // amplitude_damping requires dim == 2
  double param;  // in [0, 1]

  void validate() const;
};

/// Named channel families in Kraus form:
///  - depolarizing: rho -> (1-p) rho + p 1/d
///  - dephasing:    rho -> (1-p) rho + p sum_k |k><k| rho |k><k|
///  - amplitude damping (qubit), decay parameter gamma in [0,1]
Channel make_family(const ChannelFamilySpec& spec);

}  // namespace nohair
