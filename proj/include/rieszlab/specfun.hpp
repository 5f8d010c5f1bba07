#pragma once

#include "rieszlab/weights.hpp"

namespace rieszlab {

/// Log of the multivariate gamma function for S_m^beta:
///   log Gamma_m^beta[a] = m(m-1)beta/4 log pi + sum_i log Gamma(a-(i-1)beta/2),
/// valid for a > (m-1)beta/2.
double lgamma_m(double a, int beta, int m);

enum class WeightSign { plus, minus };

/// Log of the weighted multivariate gamma function.
/// sign=plus:  Gamma_m^beta[a, kappa], factors Gamma(a + k_i - (i-1)beta/2),
///             requiring a + k_m > (m-1)beta/2.
/// sign=minus: Gamma_m^beta[a, -kappa], factors Gamma(a - k_i - (m-i)beta/2),
///             requiring a > (m-1)beta/2 + k_1.
double lgamma_m_weighted(double a, const WeightVector& kappa, int beta, int m,
                         WeightSign sign);

/// Log of the generalized Pochhammer symbol
///   [a]_kappa^beta = Gamma_m^beta[a, kappa] / Gamma_m^beta[a]
///                  = prod_i (a - (i-1)beta/2)_{k_i}.
double log_gen_pochhammer(double a, const WeightVector& kappa, int beta);

/// Log volume of the Stiefel manifold V_{m,n}^beta:
///   m log 2 + (m n beta / 2) log pi - log Gamma_m^beta[n beta / 2].
double log_stiefel_volume(int n, int m, int beta);

} // namespace rieszlab
