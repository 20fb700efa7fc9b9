#include "calogero/dynamics.hpp"

#include <cmath>
#include <sstream>

#include "calogero/duality.hpp"
#include "calogero/lax.hpp"
#include "calogero/spectral.hpp"

namespace calogero {

namespace {

// Every H_k with k >= 1 generates a flow; those with k > n are functions of
// H_1..H_n, so e.g. the H_2 flow of a single particle is still available.
void check_flow_index(int k) {
  if (k < 1) {
    std::ostringstream msg;
    msg << "flow index k = " << k << " must be at least 1";
    throw KOutOfRange(msg.str());
  }
}

std::vector<double> positions_at(const ActionAnglePoint& aa, double t,
                                 const NumericConfig& cfg) {
  return descending_eigenvalues(build_dual(evolve_angles(aa, t, 2)).x_like, cfg);
}

}  // namespace

ActionAnglePoint evolve_angles(const ActionAnglePoint& aa, double t, int k) {
  check_flow_index(k);
  const auto lambda = aa.lambda();
  std::vector<double> phi(aa.phi().begin(), aa.phi().end());
  for (std::size_t j = 0; j < phi.size(); ++j) phi[j] += t * std::pow(lambda[j], k - 1);
  return ActionAnglePoint({lambda.begin(), lambda.end()}, std::move(phi), aa.g());
}

PhaseSpacePoint evolve(const PhaseSpacePoint& pt, double t, int k, const NumericConfig& cfg) {
  check_flow_index(k);
  if (t == 0.0) return pt;
  return backward_map(evolve_angles(forward_map(pt, cfg), t, k), cfg);
}

std::vector<double> evolve_projection(const PhaseSpacePoint& pt, double t,
                                      const NumericConfig& cfg) {
  const LaxPair pair = build_lax(pt);
  return descending_eigenvalues(pair.x_like + t * pair.p_like, cfg);
}

ScatteringData scattering_data(const PhaseSpacePoint& pt, double t_large,
                               const NumericConfig& cfg) {
  if (!(t_large > 0.0) || !std::isfinite(t_large))
    throw ValidationError("t_large must be positive and finite");
  const ActionAnglePoint aa = forward_map(pt, cfg);
  const auto near = positions_at(aa, t_large, cfg);
  const auto far = positions_at(aa, 2.0 * t_large, cfg);
  ScatteringData out;
  for (std::size_t j = 0; j < near.size(); ++j) {
    const double momentum = (far[j] - near[j]) / t_large;
    out.momenta.push_back(momentum);
    out.offsets.push_back(near[j] - t_large * momentum);
  }
  return out;
}

}  // namespace calogero
