#include "calogero/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace calogero {

SpectralData adjugate_polynomial(const ComplexMatrix& hermitian, double g) {
  const auto n = hermitian.rows();
  const double center = n > 0 ? hermitian.trace().real() / static_cast<double>(n) : 0.0;
  return adjugate_polynomial(hermitian, center, g);
}

SpectralData adjugate_polynomial(const ComplexMatrix& hermitian, double center, double g) {
  const auto n = hermitian.rows();
  if (n == 0 || hermitian.cols() != n) throw ValidationError("adjugate needs a square matrix");
  const ComplexMatrix shifted = hermitian - center * ComplexMatrix::Identity(n, n);
  const ComplexMatrix identity = ComplexMatrix::Identity(n, n);

  SpectralData sd;
  sd.n = static_cast<std::size_t>(n);
  sd.g = g;
  sd.center = center;
  sd.a_coeffs.assign(sd.n + 1, 0.0);
  sd.adj_coeffs.assign(sd.n, ComplexMatrix());
  sd.a_coeffs[sd.n] = 1.0;

  // (w - M) sum_k w^k B_k = A(w) 1 gives B_{n-1} = 1, B_{k-1} = M B_k + a_k 1,
  // with a_k = -tr(M B_k) / (n - k).
  sd.adj_coeffs[sd.n - 1] = identity;
  for (std::size_t k = sd.n - 1; k >= 1; --k) {
    const ComplexMatrix mb = shifted * sd.adj_coeffs[k];
    sd.a_coeffs[k] = -mb.trace().real() / static_cast<double>(sd.n - k);
    sd.adj_coeffs[k - 1] = mb + sd.a_coeffs[k] * identity;
  }
  sd.a_coeffs[0] = -(shifted * sd.adj_coeffs[0]).trace().real() / static_cast<double>(sd.n);
  return sd;
}

Complex eval_A(const SpectralData& sd, Complex z, int derivative) {
  if (derivative < 0 || derivative > 2) throw std::invalid_argument("derivative must be 0, 1 or 2");
  const Complex w = z - sd.center;
  Complex acc = 0.0;
  for (std::size_t k = sd.a_coeffs.size(); k-- > static_cast<std::size_t>(derivative);) {
    double factor = 1.0;
    for (int d = 0; d < derivative; ++d) factor *= static_cast<double>(k - d);
    acc = acc * w + factor * sd.a_coeffs[k];
  }
  return acc;
}

ComplexMatrix eval_adjugate(const SpectralData& sd, Complex z) {
  const Complex w = z - sd.center;
  ComplexMatrix acc = sd.adj_coeffs.back();
  for (std::size_t k = sd.adj_coeffs.size() - 1; k-- > 0;) acc = acc * w + sd.adj_coeffs[k];
  return acc;
}

namespace {

Complex weighted_sum(const ComplexMatrix& adj, std::span<const double> diagonal, bool all_entries) {
  Complex acc = 0.0;
  for (Eigen::Index j = 0; j < adj.rows(); ++j) {
    const Complex row = all_entries ? adj.row(j).sum() : adj(j, j);
    acc += diagonal[static_cast<std::size_t>(j)] * row;
  }
  return acc;
}

void check_simple(const std::vector<double>& descending, const NumericConfig& cfg,
                  const char* what) {
  if (descending.size() < 2) return;
  const double threshold = cfg.eig_gap_tol * (descending.front() - descending.back() + 1.0);
  for (std::size_t k = 1; k < descending.size(); ++k) {
    const double gap = descending[k - 1] - descending[k];
    if (gap < threshold) {
      std::ostringstream msg;
      msg << what << " has an eigenvalue gap " << gap << " below " << threshold
          << " between indices " << k - 1 << " and " << k;
      throw DegenerateSpectrum(msg.str());
    }
  }
}

std::vector<double> reversed(const Eigen::VectorXd& ascending) {
  std::vector<double> out(ascending.data(), ascending.data() + ascending.size());
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

Complex eval_C(const SpectralData& sd, std::span<const double> diagonal, Complex z) {
  return weighted_sum(eval_adjugate(sd, z), diagonal, true);
}

Complex eval_D(const SpectralData& sd, std::span<const double> diagonal, Complex z) {
  return weighted_sum(eval_adjugate(sd, z), diagonal, false);
}

Complex eval_C(const PhaseSpacePoint& pt, Complex z) {
  return eval_C(adjugate_polynomial(lax_matrix(pt), pt.g()), pt.q(), z);
}

Complex eval_D(const PhaseSpacePoint& pt, Complex z) {
  return eval_D(adjugate_polynomial(lax_matrix(pt), pt.g()), pt.q(), z);
}

std::vector<double> descending_eigenvalues(const ComplexMatrix& hermitian,
                                           const NumericConfig& cfg) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
  auto values = reversed(solver.eigenvalues());
  check_simple(values, cfg, "spectrum");
  return values;
}

SpectralCoordinates spectral_coordinates(std::span<const double> diagonal,
                                         const ComplexMatrix& hermitian,
                                         const NumericConfig& cfg) {
  const SpectralData sd = adjugate_polynomial(hermitian);
  SpectralCoordinates out;
  out.lambda = descending_eigenvalues(hermitian, cfg);
  for (const double lambda : out.lambda) {
    const Complex slope = eval_A(sd, lambda, 1);
    const ComplexMatrix adj = eval_adjugate(sd, lambda);
    const Complex theta = weighted_sum(adj, diagonal, true) / slope;
    const Complex mu = weighted_sum(adj, diagonal, false) / slope;
    out.theta.push_back(theta);
    out.mu.push_back(mu.real());
    out.mu_imag.push_back(mu.imag());
    out.f_im.push_back(theta.imag() - mu.imag());
  }
  return out;
}

SpectralCoordinates sklyanin_coordinates(const PhaseSpacePoint& pt, const NumericConfig& cfg) {
  return spectral_coordinates(pt.q(), lax_matrix(pt), cfg);
}

SpectralCoordinates coordinates_via_projectors(const PhaseSpacePoint& pt,
                                               const NumericConfig& cfg) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(lax_matrix(pt));
  if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
  SpectralCoordinates out;
  out.lambda = reversed(solver.eigenvalues());
  check_simple(out.lambda, cfg, "spectrum");
  const auto q = pt.q();
  const auto n = static_cast<Eigen::Index>(pt.n());
  for (Eigen::Index col = n; col-- > 0;) {
    const auto w = solver.eigenvectors().col(col);
    Complex q_w = 0.0;  // v^dag Q w
    Complex w_v = 0.0;  // w^dag v
    double mu = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double qj = q[static_cast<std::size_t>(j)];
      q_w += qj * w(j);
      w_v += std::conj(w(j));
      mu += qj * std::norm(w(j));
    }
    const Complex theta = q_w * w_v;
    out.theta.push_back(theta);
    out.mu.push_back(mu);
    out.mu_imag.push_back(0.0);
    out.f_im.push_back(theta.imag());
  }
  return out;
}

double theorem_residual(const PhaseSpacePoint& pt, Complex z) {
  const SpectralData sd = adjugate_polynomial(lax_matrix(pt), pt.g());
  const ComplexMatrix adj = eval_adjugate(sd, z);
  const Complex c = weighted_sum(adj, pt.q(), true);
  const Complex d = weighted_sum(adj, pt.q(), false);
  const Complex half_ig(0.0, 0.5 * pt.g());
  return std::abs(c - d - half_ig * eval_A(sd, z, 2));
}

double theorem_scale(const PhaseSpacePoint& pt, Complex z) {
  double q_max = 0.0;
  for (const double x : pt.q()) q_max = std::max(q_max, std::abs(x));
  const double e = static_cast<double>(pt.n()) - 1.0;
  return std::pow(1.0 + std::abs(z), e) * (1.0 + q_max) *
         std::pow(1.0 + lax_matrix(pt).norm(), e);
}

std::vector<double> correction_field(std::span<const double> lambda, double g) {
  std::vector<double> f(lambda.size(), 0.0);
  for (std::size_t k = 0; k < lambda.size(); ++k)
    for (std::size_t l = 0; l < lambda.size(); ++l)
      if (l != k) f[k] += g / (lambda[k] - lambda[l]);
  return f;
}

}  // namespace calogero
