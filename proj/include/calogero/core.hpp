#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace calogero {

// Input rejected before any numerics ran. The CLI maps these to exit status 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrderingViolation : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NonFinite : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class KOutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Numerics could not produce a trustworthy answer. The CLI maps these to exit status 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateSpectrum : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StepLeavesDomain : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Tolerances shared by every module.
///
/// eig_gap_tol is relative to the spectral diameter plus one; fd_step is the
/// finite-difference step before per-coordinate scaling by (1 + |x|);
/// identity_tol is the residual bound for exact algebraic identities.
struct NumericConfig {
  double eig_gap_tol = 1e-9;
  double fd_step = 1e-5;
  double identity_tol = 1e-10;

  /// Throws ValidationError unless all fields are positive and fd_step < 1.
  void check() const;
};

/// A point (q, p) of the phase space with coupling g. Positions are strictly
/// decreasing, so the point lies in the ordered configuration domain.
class PhaseSpacePoint {
 public:
  PhaseSpacePoint(std::vector<double> q, std::vector<double> p, double g);

  std::size_t n() const { return q_.size(); }
  double g() const { return g_; }
  std::span<const double> q() const { return q_; }
  std::span<const double> p() const { return p_; }

 private:
  std::vector<double> q_;
  std::vector<double> p_;
  double g_;
};

/// Action-angle coordinates: actions lambda (strictly decreasing) and angles phi.
class ActionAnglePoint {
 public:
  ActionAnglePoint(std::vector<double> lambda, std::vector<double> phi, double g);

  std::size_t n() const { return lambda_.size(); }
  double g() const { return g_; }
  std::span<const double> lambda() const { return lambda_; }
  std::span<const double> phi() const { return phi_; }

 private:
  std::vector<double> lambda_;
  std::vector<double> phi_;
  double g_;
};

PhaseSpacePoint validate_phase_point(std::span<const double> q, std::span<const double> p,
                                     double g);

ActionAnglePoint validate_action_angle_point(std::span<const double> lambda,
                                             std::span<const double> phi, double g);

// Momenta of random points are drawn uniformly from [-kMomentumRange, kMomentumRange].
inline constexpr double kMomentumRange = 1.0;

/// Deterministic random point: consecutive position gaps lie in
/// [min_gap, 2 min_gap), q_1 is uniform in [-1, 1].
PhaseSpacePoint random_phase_point(std::uint64_t seed, std::size_t n, double g, double min_gap);

/// Same generator applied to (lambda, phi): lambda gets the ordered gaps.
ActionAnglePoint random_action_angle_point(std::uint64_t seed, std::size_t n, double g,
                                           double min_gap);

}  // namespace calogero
