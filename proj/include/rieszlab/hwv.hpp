#pragma once

#include <optional>

#include "rieszlab/linalg.hpp"
#include "rieszlab/weights.hpp"

namespace rieszlab {

/// log q_kappa(A): the highest weight vector (generalized power) of a
/// positive definite A, computed from the L'DL pivots as
/// sum_i k_i log lambda_i. Equivalent to the product of leading principal
/// minor powers |A_m|^{k_m} prod |A_i|^{k_i - k_{i+1}}.
double log_q_kappa(const HermitianPD& a, const WeightVector& kappa);

/// log q*_kappa(A): the dual generalized power, computed from the pivots
/// of the reversed decomposition (trailing principal minor ratios):
/// sum_j k_j log mu_j with mu = ldl_pivots_trailing(A). On diagonal
/// matrices this is prod lambda_i^{k_{m-i+1}}; on general matrices the
/// trailing-minor form is the one for which
/// q_kappa(A^{-1}) = q*_{-kappa*}(A) holds identically.
double log_q_star_kappa(const HermitianPD& a, const WeightVector& kappa);

/// log q_kappa(A^{-1}) without forming the inverse, via the identity
/// above applied to -kappa*.
double log_q_kappa_inv(const HermitianPD& a, const WeightVector& kappa);

/// Boundary-tolerant evaluations on the closure of the cone: pivots past
/// the first failing column are consulted only where the weight is
/// nonzero (a zero exponent makes the factor exactly one in the limit).
/// nullopt means the generalized power has no finite positive limit at
/// the point, which the densities report as -infinity.
std::optional<double> try_log_q_kappa(const HermitianPD& a, const WeightVector& kappa);
std::optional<double> try_log_q_kappa_inv(const HermitianPD& a, const WeightVector& kappa);

} // namespace rieszlab
