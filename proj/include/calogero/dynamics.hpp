#pragma once

#include <vector>

#include "calogero/core.hpp"

namespace calogero {

/// Flow of H_k in action-angle form: lambda fixed, phi_j += t lambda_j^(k-1).
/// Throws KOutOfRange for k < 1; k may exceed n.
ActionAnglePoint evolve_angles(const ActionAnglePoint& aa, double t, int k);

/// Exact flow of H_k for time t, computed as
/// backward_map(evolve_angles(forward_map(pt), t, k)).
PhaseSpacePoint evolve(const PhaseSpacePoint& pt, double t, int k, const NumericConfig& cfg = {});

/// Positions under the H_2 flow from the free matrix motion: the spectrum of
/// Q + t L, descending. Independent of the action-angle route.
std::vector<double> evolve_projection(const PhaseSpacePoint& pt, double t,
                                      const NumericConfig& cfg = {});

struct ScatteringData {
  std::vector<double> momenta;  // (q(2T) - q(T)) / T
  std::vector<double> offsets;  // q(T) - T * momenta
};

/// Finite-time estimate of the asymptotic momenta and offsets of the H_2 flow
/// at T = t_large. The momenta approach the actions lambda as T grows.
ScatteringData scattering_data(const PhaseSpacePoint& pt, double t_large,
                               const NumericConfig& cfg = {});

}  // namespace calogero
