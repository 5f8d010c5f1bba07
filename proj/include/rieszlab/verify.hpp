#pragma once

#include <string>
#include <vector>

#include "rieszlab/dens.hpp"
#include "rieszlab/quadrature.hpp"
#include "rieszlab/rng.hpp"

namespace rieszlab {

/// One executable piece of evidence. passed is equivalent to
/// |statistic - target| <= tolerance; the target is also spelled out in
/// detail.
struct CheckReport {
    std::string name;
    double statistic = 0;
    double target = 0;
    double tolerance = 0;
    long n = 0;           // samples or quadrature nodes
    bool passed = false;
    std::string detail;
};

CheckReport make_report(std::string name, double statistic, double target, double tolerance,
                        long n, std::string detail = "");

/// Quadrature of exp(logpdf) over the support; statistic is the integral,
/// target 1. Scalar cases run at 1e-8, the m=2 matrix/sv/eig cases at
/// 1e-5. Throws IntegrationFailure when the node budget (1e7) runs out.
CheckReport check_normalization_riesz(const RieszParams& p, double tol);
CheckReport check_normalization_kotzriesz(const KotzRieszParams& p, double tol);
CheckReport check_normalization_triesz(const TRieszParams& p, double tol);
CheckReport check_normalization_beta_riesz(const BetaRieszParams& p, double tol);
CheckReport check_normalization_sv(const SvParams& p, double tol);
CheckReport check_normalization_eig(const SvParams& p, double tol);

/// Coordinate-matrix determinant of X -> A X B on n x m matrices against
/// |A*A|^{m beta/2} |B*B|^{n beta/2}. statistic is the ratio of the two.
CheckReport check_jacobian_linear(const AlgMatrix& a, const AlgMatrix& b);

/// Determinant of X -> A X A* on the free coordinates of S_m^beta
/// against |A*A|^{(m-1)beta/2 + 1}.
CheckReport check_jacobian_symmetric(const AlgMatrix& a);

/// Singular-value law of a Gaussian matrix against the density implied by
/// the SVD measure factorization and the Stiefel volumes. m=1 runs a KS
/// test against the chi-type law; m=2 checks that the implied ordered
/// density integrates to one (this pins the pi^varrho constant).
CheckReport check_svd_measure(int n, int m, int beta, RngStream& rng, long n_samples);

/// Weighted gamma integral: m=1 by quadrature, m=2 by importance sampling
/// with the weight-free Riesz proposal (statistic: ratio to the analytic
/// value; passes within max(1%, 3 standard errors)).
CheckReport check_gamma_integral(double a, const WeightVector& kappa, int beta, int m,
                                 RngStream& rng, long n_samples);

/// Monte Carlo spherical average of q_tau against the zonal ratio; passes
/// within 3 standard errors.
CheckReport check_spherical_identity(const Partition& tau, const HermitianPD& l, int beta,
                                     RngStream& rng, long n_samples);

/// The default desk-scale suite (deterministic given the seed). Honors
/// the RIESZ_LAB_THREADS cap when fanning out; reports are merged in name
/// order regardless of scheduling.
std::vector<CheckReport> default_check_suite(std::uint64_t seed);

} // namespace rieszlab
