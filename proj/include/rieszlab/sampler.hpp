#pragma once

#include <utility>

#include "rieszlab/dens.hpp"
#include "rieszlab/rng.hpp"

namespace rieszlab {

/// Scalar Riesz variable: gamma with shape nu*beta/2 + k (type I) or
/// nu*beta/2 - k (type II) and rate beta / rho.
double sample_riesz_scalar(RngStream& rng, double nu, double k, double rho, int beta,
                           Variant variant);

/// Matrix Riesz sample by the Bartlett-type triangular construction.
/// Type I: W = u(Xi)* T*T u(Xi), T upper triangular with
///   t_ii^2 ~ gamma(a + k_i - (i-1)beta/2, rate beta)
/// and off-diagonal coordinates normal(0, 1/(2 beta)).
/// Type II is the flip-conjugated type I with weight -kappa* (which puts
/// the diagonal laws at shapes a - k_i - (m-i)beta/2), and the scale
/// congruence uses the lower factor l with Xi = l* l.
HermitianPD sample_riesz_matrix(RngStream& rng, double a, const WeightVector& kappa,
                                const HermitianPD& xi, int beta, Variant variant);

/// Kotz-Riesz sample via the polar-type factorization
/// Y = u(Theta)* H1 u(S) u(Sigma) + mu with H1 Haar on the Stiefel
/// manifold and S matrix Riesz of shape n beta / 2.
AlgMatrix sample_kotzriesz(RngStream& rng, const KotzRieszParams& p);

/// T-Riesz sample T = S^{-1/2} Y + mu; also returns the realized mixing
/// variable S for diagnostics.
std::pair<AlgMatrix, double> sample_triesz_with_mixing(RngStream& rng,
                                                       const TRieszParams& p);

AlgMatrix sample_triesz(RngStream& rng, const TRieszParams& p);

/// F = T* T with T central T-Riesz (Theta = I_n).
HermitianPD sample_beta_riesz(RngStream& rng, const BetaRieszParams& p);

} // namespace rieszlab
