#include "calogero/lax.hpp"

#include <sstream>

namespace calogero {

namespace {

// diag(d) + sign * i g / (d_j - d_k) off the diagonal; entries below the
// diagonal are written as exact conjugates of the ones above.
ComplexMatrix slice_matrix(std::span<const double> diagonal_of_other,
                           std::span<const double> own_diagonal, double g, double sign) {
  const auto n = static_cast<Eigen::Index>(own_diagonal.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    m(j, j) = own_diagonal[j];
    for (Eigen::Index k = j + 1; k < n; ++k) {
      const Complex entry(0.0, sign * g / (diagonal_of_other[j] - diagonal_of_other[k]));
      m(j, k) = entry;
      m(k, j) = std::conj(entry);
    }
  }
  return m;
}

ComplexMatrix real_diagonal(std::span<const double> d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(j, j) = d[j];
  return m;
}

}  // namespace

ComplexMatrix lax_matrix(const PhaseSpacePoint& pt) {
  return slice_matrix(pt.q(), pt.p(), pt.g(), +1.0);
}

LaxPair build_lax(const PhaseSpacePoint& pt) {
  return {Gauge::PositionDiagonal, real_diagonal(pt.q()), lax_matrix(pt), pt.g()};
}

LaxPair build_dual(const ActionAnglePoint& aa) {
  return {Gauge::MomentumDiagonal, slice_matrix(aa.lambda(), aa.phi(), aa.g(), -1.0),
          real_diagonal(aa.lambda()), aa.g()};
}

double hamiltonian(const PhaseSpacePoint& pt, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > pt.n()) {
    std::ostringstream msg;
    msg << "integral index k = " << k << " outside 1.." << pt.n();
    throw KOutOfRange(msg.str());
  }
  const ComplexMatrix lax = lax_matrix(pt);
  ComplexMatrix power = lax;
  for (int i = 1; i < k; ++i) power = power * lax;
  return power.trace().real() / k;
}

double calogero_energy(const PhaseSpacePoint& pt) {
  const auto q = pt.q();
  const auto p = pt.p();
  double kinetic = 0.0;
  double potential = 0.0;
  for (std::size_t j = 0; j < pt.n(); ++j) {
    kinetic += p[j] * p[j];
    for (std::size_t k = j + 1; k < pt.n(); ++k) {
      const double d = q[j] - q[k];
      potential += 1.0 / (d * d);
    }
  }
  return 0.5 * kinetic + pt.g() * pt.g() * potential;
}

double momentum_map_residual(const LaxPair& pair) {
  const auto n = pair.x_like.rows();
  ComplexMatrix r = pair.x_like * pair.p_like - pair.p_like * pair.x_like;
  // i g (v v^dag - 1) has zero diagonal and i g everywhere else.
  const Complex ig(0.0, pair.g);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      if (j != k) r(j, k) -= ig;
  return r.norm();
}

}  // namespace calogero
