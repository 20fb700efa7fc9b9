#pragma once

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "calogero/core.hpp"

namespace calogero {

enum class DifferenceMode {
  Fast,          // plain central differences
  Extrapolated,  // Richardson combination of steps h and h/2
};

DifferenceMode parse_difference_mode(std::string_view name);
std::string_view to_string(DifferenceMode mode);

using Observable = std::function<double(const PhaseSpacePoint&)>;
using VectorObservable = std::function<std::vector<double>(const PhaseSpacePoint&)>;

/// (dF/dq_1 .. dF/dq_n, dF/dp_1 .. dF/dp_n) with step fd_step * (1 + |x_j|).
/// Position steps are halved until they stay between the neighbouring
/// particles; StepLeavesDomain is thrown once a step shrinks below 1/1024 of
/// its nominal size.
std::vector<double> fd_gradient(const Observable& observable, const PhaseSpacePoint& pt,
                                const NumericConfig& cfg = {},
                                DifferenceMode mode = DifferenceMode::Extrapolated);

/// Jacobian of a vector observable: one row per component, 2n columns ordered
/// as in fd_gradient.
Eigen::MatrixXd fd_jacobian(const VectorObservable& observable, const PhaseSpacePoint& pt,
                            const NumericConfig& cfg = {},
                            DifferenceMode mode = DifferenceMode::Extrapolated);

/// {F, G} = sum_j dF/dq_j dG/dp_j - dF/dp_j dG/dq_j from two gradients.
double bracket_from_gradients(std::span<const double> grad_f, std::span<const double> grad_g);

/// Matrix of brackets {a_i, b_j} between the rows of two Jacobians.
Eigen::MatrixXd bracket_matrix(const Eigen::MatrixXd& jac_a, const Eigen::MatrixXd& jac_b);

double bracket(const Observable& f, const Observable& g, const PhaseSpacePoint& pt,
               const NumericConfig& cfg = {},
               DifferenceMode mode = DifferenceMode::Extrapolated);

/// Brackets of the spectral coordinates with the actions. Entry (j, k) of
/// each matrix is {X_j, lambda_k} (or {mu_j, mu_k}); the canonical pattern is
/// the identity for theta_lambda_re and mu_lambda and zero for the rest.
struct BracketReport {
  std::size_t n = 0;
  Eigen::MatrixXd theta_lambda_re;
  Eigen::MatrixXd theta_lambda_im;
  Eigen::MatrixXd mu_lambda;
  Eigen::MatrixXd lambda_lambda;
  Eigen::MatrixXd mu_mu;
  double max_deviation = 0.0;
};

/// Requires every position gap to be at least 10 fd_step (StepLeavesDomain
/// otherwise) and a simple spectrum of L (DegenerateSpectrum otherwise).
BracketReport canonical_report(const PhaseSpacePoint& pt, const NumericConfig& cfg = {},
                               DifferenceMode mode = DifferenceMode::Extrapolated);

}  // namespace calogero
