#include "calogero/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "calogero/spectral.hpp"

namespace calogero {

namespace {

constexpr double kShrinkFloor = 1.0 / 1024.0;

// Step for coordinate `index` in (q, p) order, shrunk so that q +- h keeps
// the ordering with a margin of half the available gap.
double coordinate_step(const PhaseSpacePoint& pt, std::size_t index, const NumericConfig& cfg) {
  const std::size_t n = pt.n();
  const bool is_position = index < n;
  const std::size_t j = is_position ? index : index - n;
  const double x = is_position ? pt.q()[j] : pt.p()[j];
  const double nominal = cfg.fd_step * (1.0 + std::abs(x));
  if (!is_position) return nominal;

  double room = std::numeric_limits<double>::infinity();
  if (j > 0) room = std::min(room, pt.q()[j - 1] - x);
  if (j + 1 < n) room = std::min(room, x - pt.q()[j + 1]);
  double h = nominal;
  while (h >= 0.5 * room) {
    h *= 0.5;
    if (h < kShrinkFloor * nominal) {
      std::ostringstream msg;
      msg << "finite-difference step for q_" << j + 1 << " would leave the ordered domain (gap "
          << room << ")";
      throw StepLeavesDomain(msg.str());
    }
  }
  return h;
}

PhaseSpacePoint displaced(const PhaseSpacePoint& pt, std::size_t index, double delta) {
  std::vector<double> q(pt.q().begin(), pt.q().end());
  std::vector<double> p(pt.p().begin(), pt.p().end());
  if (index < pt.n())
    q[index] += delta;
  else
    p[index - pt.n()] += delta;
  return PhaseSpacePoint(std::move(q), std::move(p), pt.g());
}

Eigen::VectorXd as_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Eigen::VectorXd central_difference(const VectorObservable& f, const PhaseSpacePoint& pt,
                                   std::size_t index, double h) {
  const Eigen::VectorXd plus = as_vector(f(displaced(pt, index, h)));
  const Eigen::VectorXd minus = as_vector(f(displaced(pt, index, -h)));
  if (plus.size() != minus.size()) throw NumericalError("observable changed its output size");
  return (plus - minus) / (2.0 * h);
}

}  // namespace

DifferenceMode parse_difference_mode(std::string_view name) {
  if (name == "fast") return DifferenceMode::Fast;
  if (name == "extrapolated") return DifferenceMode::Extrapolated;
  throw ValidationError("unknown difference mode '" + std::string(name) +
                        "' (expected fast or extrapolated)");
}

std::string_view to_string(DifferenceMode mode) {
  return mode == DifferenceMode::Fast ? "fast" : "extrapolated";
}

Eigen::MatrixXd fd_jacobian(const VectorObservable& observable, const PhaseSpacePoint& pt,
                            const NumericConfig& cfg, DifferenceMode mode) {
  const std::size_t dim = 2 * pt.n();
  Eigen::MatrixXd jac;
  for (std::size_t i = 0; i < dim; ++i) {
    const double h = coordinate_step(pt, i, cfg);
    Eigen::VectorXd column = central_difference(observable, pt, i, h);
    if (mode == DifferenceMode::Extrapolated) {
      const Eigen::VectorXd half = central_difference(observable, pt, i, 0.5 * h);
      column = (4.0 * half - column) / 3.0;
    }
    if (i == 0) jac.resize(column.size(), static_cast<Eigen::Index>(dim));
    jac.col(static_cast<Eigen::Index>(i)) = column;
  }
  return jac;
}

std::vector<double> fd_gradient(const Observable& observable, const PhaseSpacePoint& pt,
                                const NumericConfig& cfg, DifferenceMode mode) {
  const VectorObservable wrapped = [&observable](const PhaseSpacePoint& x) {
    return std::vector<double>{observable(x)};
  };
  const Eigen::MatrixXd jac = fd_jacobian(wrapped, pt, cfg, mode);
  return std::vector<double>(jac.data(), jac.data() + jac.size());
}

double bracket_from_gradients(std::span<const double> grad_f, std::span<const double> grad_g) {
  const std::size_t n = grad_f.size() / 2;
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    acc += grad_f[j] * grad_g[n + j] - grad_f[n + j] * grad_g[j];
  return acc;
}

Eigen::MatrixXd bracket_matrix(const Eigen::MatrixXd& jac_a, const Eigen::MatrixXd& jac_b) {
  const Eigen::Index n = jac_a.cols() / 2;
  return jac_a.leftCols(n) * jac_b.rightCols(n).transpose() -
         jac_a.rightCols(n) * jac_b.leftCols(n).transpose();
}

double bracket(const Observable& f, const Observable& g, const PhaseSpacePoint& pt,
               const NumericConfig& cfg, DifferenceMode mode) {
  return bracket_from_gradients(fd_gradient(f, pt, cfg, mode), fd_gradient(g, pt, cfg, mode));
}

BracketReport canonical_report(const PhaseSpacePoint& pt, const NumericConfig& cfg,
                               DifferenceMode mode) {
  const auto q = pt.q();
  for (std::size_t j = 1; j < q.size(); ++j) {
    if (q[j - 1] - q[j] < 10.0 * cfg.fd_step) {
      std::ostringstream msg;
      msg << "position gap " << q[j - 1] - q[j] << " is within 10 fd steps of a collision";
      throw StepLeavesDomain(msg.str());
    }
  }
  // Checks the base point up front so a degenerate spectrum is reported as such.
  (void)sklyanin_coordinates(pt, cfg);

  const std::size_t n = pt.n();
  const VectorObservable coordinates = [&cfg](const PhaseSpacePoint& x) {
    const SpectralCoordinates sc = sklyanin_coordinates(x, cfg);
    std::vector<double> out;
    out.reserve(4 * sc.lambda.size());
    out.insert(out.end(), sc.lambda.begin(), sc.lambda.end());
    out.insert(out.end(), sc.mu.begin(), sc.mu.end());
    for (const auto& t : sc.theta) out.push_back(t.real());
    for (const auto& t : sc.theta) out.push_back(t.imag());
    return out;
  };
  const Eigen::MatrixXd jac = fd_jacobian(coordinates, pt, cfg, mode);
  const auto rows = static_cast<Eigen::Index>(n);
  const Eigen::MatrixXd lambda = jac.topRows(rows);
  const Eigen::MatrixXd mu = jac.middleRows(rows, rows);
  const Eigen::MatrixXd theta_re = jac.middleRows(2 * rows, rows);
  const Eigen::MatrixXd theta_im = jac.bottomRows(rows);

  BracketReport report;
  report.n = n;
  report.theta_lambda_re = bracket_matrix(theta_re, lambda);
  report.theta_lambda_im = bracket_matrix(theta_im, lambda);
  report.mu_lambda = bracket_matrix(mu, lambda);
  report.lambda_lambda = bracket_matrix(lambda, lambda);
  report.mu_mu = bracket_matrix(mu, mu);

  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(rows, rows);
  report.max_deviation = std::max({
      (report.mu_lambda - identity).cwiseAbs().maxCoeff(),
      (report.theta_lambda_re - identity).cwiseAbs().maxCoeff(),
      report.theta_lambda_im.cwiseAbs().maxCoeff(),
      report.lambda_lambda.cwiseAbs().maxCoeff(),
      report.mu_mu.cwiseAbs().maxCoeff(),
  });
  return report;
}

}  // namespace calogero
