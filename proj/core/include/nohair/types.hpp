#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace nohair {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Numerical contracts shared across the library. Values are absolute
// tolerances on max-abs entries unless noted otherwise.
namespace tol {
inline constexpr double hermiticity = 1e-12;   // |M - M^dag| guard before symmetrizing
inline constexpr double unit_trace = 1e-10;    // trace of a density operator
inline constexpr double eigen_floor = -1e-10;  // smallest admissible eigenvalue
inline constexpr double unit_norm = 1e-12;     // pure-state normalization
inline constexpr double isometry = 1e-10;      // |V^dag V - 1|
inline constexpr double unitarity = 1e-12;     // |U^dag U - 1|
inline constexpr double kraus_complete = 1e-10;
inline constexpr double roundtrip = 1e-9;      // representation conversions
}  // namespace tol

}  // namespace nohair
