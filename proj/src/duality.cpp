#include "calogero/duality.hpp"

#include "calogero/lax.hpp"
#include "calogero/spectral.hpp"

namespace calogero {

ActionAnglePoint forward_map(const PhaseSpacePoint& pt, const NumericConfig& cfg) {
  auto sc = sklyanin_coordinates(pt, cfg);
  return ActionAnglePoint(std::move(sc.lambda), std::move(sc.mu), pt.g());
}

PhaseSpacePoint backward_map(const ActionAnglePoint& aa, const NumericConfig& cfg) {
  // Same formula as the forward direction with the two matrices exchanged:
  // the diagonal partner is L~ = diag(lambda), the Hermitian one is Q~.
  const LaxPair dual = build_dual(aa);
  auto sc = spectral_coordinates(aa.lambda(), dual.x_like, cfg);
  return PhaseSpacePoint(std::move(sc.lambda), std::move(sc.mu), aa.g());
}

}  // namespace calogero
