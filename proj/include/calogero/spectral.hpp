#pragma once

#include <span>
#include <vector>

#include "calogero/core.hpp"
#include "calogero/lax.hpp"

namespace calogero {

/// Characteristic polynomial A(z) = det(z - H) and adjugate polynomial
/// adj(z - H) = sum_k w^k M_k of a Hermitian matrix H, both expanded in the
/// shifted variable w = z - center.
///
/// The expansion point defaults to tr(H)/n. For traceless H it is zero and the
/// coefficients are the plain coefficients in z.
struct SpectralData {
  std::size_t n = 0;
  double g = 0.0;
  double center = 0.0;
  std::vector<double> a_coeffs;           // n + 1 entries, a_coeffs[n] == 1
  std::vector<ComplexMatrix> adj_coeffs;  // n entries, adj_coeffs[n - 1] == identity
};

/// Faddeev-LeVerrier recursion. Exact in exact arithmetic; the adjugate stays
/// finite at eigenvalues where the resolvent does not.
SpectralData adjugate_polynomial(const ComplexMatrix& hermitian, double g = 0.0);
SpectralData adjugate_polynomial(const ComplexMatrix& hermitian, double center, double g);

/// A(z), A'(z) or A''(z) by Horner's scheme. derivative must be 0, 1 or 2.
Complex eval_A(const SpectralData& sd, Complex z, int derivative = 0);

ComplexMatrix eval_adjugate(const SpectralData& sd, Complex z);

// tr(diag(d) adj(z - H) v v^dag): the sum of all entries of diag(d) adj(z - H).
Complex eval_C(const SpectralData& sd, std::span<const double> diagonal, Complex z);
// tr(diag(d) adj(z - H)).
Complex eval_D(const SpectralData& sd, std::span<const double> diagonal, Complex z);

Complex eval_C(const PhaseSpacePoint& pt, Complex z);
Complex eval_D(const PhaseSpacePoint& pt, Complex z);

struct SpectralCoordinates {
  std::vector<double> lambda;  // descending
  std::vector<Complex> theta;  // C(lambda_k) / A'(lambda_k)
  std::vector<double> mu;      // Re D(lambda_k) / A'(lambda_k)
  std::vector<double> mu_imag; // rounding residue of Im D(lambda_k) / A'(lambda_k)
  std::vector<double> f_im;    // Im(theta_k - mu_k)
};

/// Eigenvalues of a Hermitian matrix, sorted descending. Throws
/// DegenerateSpectrum when min gap < eig_gap_tol * (lambda_1 - lambda_n + 1).
std::vector<double> descending_eigenvalues(const ComplexMatrix& hermitian,
                                           const NumericConfig& cfg = {});

/// The generic form behind both duality directions: eigenvalues of the
/// Hermitian matrix together with C/A' and D/A' built from the real diagonal
/// matrix it is paired with.
SpectralCoordinates spectral_coordinates(std::span<const double> diagonal,
                                         const ComplexMatrix& hermitian,
                                         const NumericConfig& cfg = {});

/// Sklyanin's theta_k and the conjugates mu_k for the Lax pair of pt.
SpectralCoordinates sklyanin_coordinates(const PhaseSpacePoint& pt, const NumericConfig& cfg = {});

/// Same coordinates from unit eigenvectors w_k of L:
/// mu_k = w_k^dag Q w_k and theta_k = (v^dag Q w_k)(w_k^dag v).
SpectralCoordinates coordinates_via_projectors(const PhaseSpacePoint& pt,
                                               const NumericConfig& cfg = {});

/// |C(z) - D(z) - (i g / 2) A''(z)|, which vanishes identically.
double theorem_residual(const PhaseSpacePoint& pt, Complex z);

/// (1 + |z|)^(n-1) (1 + |q|_inf) (1 + |L|_F)^(n-1), the magnitude the
/// residual above is compared against.
double theorem_scale(const PhaseSpacePoint& pt, Complex z);

/// f_k = g sum_{l != k} 1 / (lambda_k - lambda_l): the imaginary part of theta_k - mu_k.
std::vector<double> correction_field(std::span<const double> lambda, double g);

}  // namespace calogero
