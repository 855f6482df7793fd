#pragma once

#include "nohair/rng.hpp"
#include "nohair/states.hpp"
#include "nohair/types.hpp"

namespace nohair {

/// Haar-distributed unitary: QR of a Ginibre draw with the R-diagonal phase
/// correction, so the distribution is invariant under left multiplication by
/// fixed unitaries. Bitwise deterministic in the rng stream.
Matrix haar_unitary(Index dim, SeededRng& rng);

/// Haar-distributed unit vector (normalized Ginibre draw).
Vector haar_state(Index dim, SeededRng& rng);

PureStateVec random_pure_state(Index dim, SeededRng& rng, Role role = Role::F);

/// Random full-rank density matrix G G^dag / tr (Ginibre G).
Matrix random_density_matrix(Index dim, SeededRng& rng);

/// Random Hermitian matrix with N(0,1)-scale entries.
Matrix random_hermitian(Index dim, SeededRng& rng);

/// Haar isometry: first `cols` columns of a Haar unitary on `rows`.
Matrix haar_isometry(Index rows, Index cols, SeededRng& rng);

}  // namespace nohair
