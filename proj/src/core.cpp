#include "calogero/core.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <utility>

namespace calogero {

namespace {

void check_pair(std::span<const double> ordered, std::span<const double> free, double g,
                const char* ordered_name, const char* free_name) {
  if (ordered.size() != free.size()) {
    std::ostringstream msg;
    msg << ordered_name << " and " << free_name << " differ in length (" << ordered.size()
        << " vs " << free.size() << ")";
    throw ValidationError(msg.str());
  }
  if (ordered.empty()) throw ValidationError("particle count must be at least 1");
  if (!std::isfinite(g)) throw NonFinite("coupling g is not finite");
  for (std::size_t j = 0; j < ordered.size(); ++j) {
    if (!std::isfinite(ordered[j]) || !std::isfinite(free[j])) {
      std::ostringstream msg;
      msg << "non-finite entry at index " << j;
      throw NonFinite(msg.str());
    }
  }
  for (std::size_t j = 1; j < ordered.size(); ++j) {
    if (!(ordered[j - 1] > ordered[j])) {
      std::ostringstream msg;
      msg << ordered_name << " is not strictly decreasing at index " << j << " ("
          << ordered[j - 1] << " <= " << ordered[j] << ")";
      throw OrderingViolation(msg.str());
    }
  }
}

std::pair<std::vector<double>, std::vector<double>> random_ordered_pair(std::uint64_t seed,
                                                                        std::size_t n,
                                                                        double min_gap) {
  if (n == 0) throw ValidationError("particle count must be at least 1");
  if (!(min_gap > 0.0) || !std::isfinite(min_gap))
    throw ValidationError("min_gap must be positive and finite");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> ordered(n);
  std::vector<double> free(n);
  ordered[0] = 2.0 * unit(rng) - 1.0;
  for (std::size_t j = 1; j < n; ++j) ordered[j] = ordered[j - 1] - min_gap * (1.0 + unit(rng));
  for (auto& x : free) x = kMomentumRange * (2.0 * unit(rng) - 1.0);
  return {std::move(ordered), std::move(free)};
}

}  // namespace

void NumericConfig::check() const {
  auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(eig_gap_tol) || !positive(fd_step) || !positive(identity_tol))
    throw ValidationError("numeric tolerances must be positive and finite");
  if (!(fd_step < 1.0)) throw ValidationError("fd_step must be below 1");
}

PhaseSpacePoint::PhaseSpacePoint(std::vector<double> q, std::vector<double> p, double g)
    : q_(std::move(q)), p_(std::move(p)), g_(g) {
  check_pair(q_, p_, g_, "q", "p");
}

ActionAnglePoint::ActionAnglePoint(std::vector<double> lambda, std::vector<double> phi, double g)
    : lambda_(std::move(lambda)), phi_(std::move(phi)), g_(g) {
  check_pair(lambda_, phi_, g_, "lambda", "phi");
}

PhaseSpacePoint validate_phase_point(std::span<const double> q, std::span<const double> p,
                                     double g) {
  return PhaseSpacePoint({q.begin(), q.end()}, {p.begin(), p.end()}, g);
}

ActionAnglePoint validate_action_angle_point(std::span<const double> lambda,
                                             std::span<const double> phi, double g) {
  return ActionAnglePoint({lambda.begin(), lambda.end()}, {phi.begin(), phi.end()}, g);
}

PhaseSpacePoint random_phase_point(std::uint64_t seed, std::size_t n, double g, double min_gap) {
  auto [q, p] = random_ordered_pair(seed, n, min_gap);
  return PhaseSpacePoint(std::move(q), std::move(p), g);
}

ActionAnglePoint random_action_angle_point(std::uint64_t seed, std::size_t n, double g,
                                           double min_gap) {
  auto [lambda, phi] = random_ordered_pair(seed, n, min_gap);
  return ActionAnglePoint(std::move(lambda), std::move(phi), g);
}

}  // namespace calogero
