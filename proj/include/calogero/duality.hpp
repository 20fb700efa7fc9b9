#pragma once

#include "calogero/core.hpp"

namespace calogero {

/// (q, p) -> (lambda, phi): lambda is the spectrum of L, descending, and
/// phi_k = D(lambda_k) / A'(lambda_k). No diagonalizing unitary is formed.
ActionAnglePoint forward_map(const PhaseSpacePoint& pt, const NumericConfig& cfg = {});

/// (lambda, phi) -> (q, p): q is the spectrum of Q~, descending, and
/// p_k = tr(L~ adj(q_k - Q~)) / det'(q_k - Q~).
PhaseSpacePoint backward_map(const ActionAnglePoint& aa, const NumericConfig& cfg = {});

}  // namespace calogero
