#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "calogero/core.hpp"

namespace calogero {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

enum class Gauge {
  PositionDiagonal,  // (Q, L): positions on the diagonal of the first matrix
  MomentumDiagonal,  // (Q~, L~): actions on the diagonal of the second matrix
};

/// A point of the reduced phase space represented in one of the two gauge
/// slices. x_like plays the role of X, p_like of P; both are Hermitian and
/// satisfy [X, P] = i g (v v^dag - 1) with v the all-ones vector.
struct LaxPair {
  Gauge gauge;
  ComplexMatrix x_like;
  ComplexMatrix p_like;
  double g;
};

/// Q = diag(q), L_jk = p_j delta_jk + i g (1 - delta_jk) / (q_j - q_k).
LaxPair build_lax(const PhaseSpacePoint& pt);

/// Q~_jk = phi_j delta_jk - i g (1 - delta_jk) / (lambda_j - lambda_k), L~ = diag(lambda).
LaxPair build_dual(const ActionAnglePoint& aa);

/// Only the Lax matrix L of build_lax.
ComplexMatrix lax_matrix(const PhaseSpacePoint& pt);

/// H_k = tr(L^k) / k for 1 <= k <= n. Throws KOutOfRange otherwise.
double hamiltonian(const PhaseSpacePoint& pt, int k);

/// The textbook form: sum p^2 / 2 + g^2 sum_{j<k} (q_j - q_k)^-2.
double calogero_energy(const PhaseSpacePoint& pt);

/// Frobenius norm of [X, P] - i g (v v^dag - 1).
double momentum_map_residual(const LaxPair& pair);

}  // namespace calogero
