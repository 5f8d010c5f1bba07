#pragma once

#include <utility>
#include <vector>

#include "rieszlab/linalg.hpp"
#include "rieszlab/weights.hpp"

namespace rieszlab {

/// Largest partition weight for which zonal tables are built on demand.
inline constexpr int jack_default_k_max = 10;

/// Monomial expansion of the C-normalized Jack polynomials of one weight,
/// at parameter alpha = 2/beta. Row tau lists the coefficients of the
/// monomial symmetric functions m_mu in C_tau.
struct JackTableView {
    double alpha = 0;
    int weight = 0;
    std::vector<std::pair<Partition, std::vector<std::pair<Partition, double>>>> rows;
};

/// C_tau^beta evaluated at the given eigenvalues (alpha = 2/beta). The
/// C-normalization is fixed by the sum rule
///   sum_{|tau|=k} C_tau^beta(x) = (sum x_i)^k.
/// Returns 0 when tau has more parts than there are eigenvalues.
double jack_C(const Partition& tau, const std::vector<double>& eigenvalues, int beta);

/// C_tau^beta(I_m).
double jack_C_identity(const Partition& tau, int m, int beta);

/// Monte Carlo estimate with standard error.
struct McEstimate {
    double mean = 0;
    double std_error = 0;
    long n = 0;
};

/// Haar average of the generalized power over the unitary group of the
/// algebra: estimates int q_tau(H L H*) dH, which equals
/// jack_C(tau, eig(L), beta) / jack_C_identity(tau, m, beta).
McEstimate spherical_average_q(RngStream& rng, const Partition& tau, const HermitianPD& l,
                               int beta, long n_samples);

/// Table inspection / JSON dump support.
JackTableView jack_table_view(int weight, int beta);

} // namespace rieszlab
