#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rieszlab/hwv.hpp"
#include "rieszlab/jack.hpp"
#include "rieszlab/linalg.hpp"
#include "rieszlab/weights.hpp"

namespace rieszlab {

enum class Variant { I, II };

inline const char* variant_name(Variant v) { return v == Variant::I ? "I" : "II"; }

/// Riesz distribution on the cone P_m^beta, shape a, weight kappa,
/// scale Xi. Existence: type I needs a > (m-1)beta/2 - k_m, type II
/// needs a > (m-1)beta/2 + k_1.
struct RieszParams {
    double a;
    WeightVector kappa;
    HermitianPD xi;
    int beta;
    Variant variant;

    RieszParams(double a_, WeightVector kappa_, HermitianPD xi_, int beta_, Variant v);
    int dim() const { return xi.dim(); }
};

/// Kotz-Riesz distribution of an n x m matrix. Theta is the n x n row
/// scale, Sigma the m x m column scale; kappa has length m.
struct KotzRieszParams {
    WeightVector kappa;
    AlgMatrix mu;
    HermitianPD theta;
    HermitianPD sigma;
    int beta;
    Variant variant;

    KotzRieszParams(WeightVector kappa_, AlgMatrix mu_, HermitianPD theta_,
                    HermitianPD sigma_, Variant v);
    int rows() const { return mu.rows(); }
    int cols() const { return mu.cols(); }
};

/// Matrix multivariate T-Riesz distribution: T = S^{-1/2} Y + mu with a
/// scalar Riesz mixing variable S (dof nu, weight k, scale rho) and a
/// Kotz-Riesz factor Y of weight tau.
struct TRieszParams {
    double nu;
    double k;
    WeightVector tau;
    double rho;
    AlgMatrix mu;
    HermitianPD theta;
    HermitianPD sigma;
    int beta;
    Variant variant;

    TRieszParams(double nu_, double k_, WeightVector tau_, double rho_, AlgMatrix mu_,
                 HermitianPD theta_, HermitianPD sigma_, Variant v);
    int rows() const { return mu.rows(); }
    int cols() const { return mu.cols(); }
};

/// Law of F = T* T for T-Riesz T with mu = 0 and Theta = I_n
/// (the c-beta-Riesz II family for variant I, k-beta-Riesz II for
/// variant II).
struct BetaRieszParams {
    int n;
    double nu;
    double k;
    WeightVector tau;
    double rho;
    HermitianPD sigma;
    int beta;
    Variant variant;

    BetaRieszParams(int n_, double nu_, double k_, WeightVector tau_, double rho_,
                    HermitianPD sigma_, Variant v);
    int dim() const { return sigma.dim(); }
};

/// Parameters of the joint singular-value / eigenvalue densities of the
/// central T-Riesz with identity scales. tau must be an integer
/// partition (the zonal layer is defined only there); beta = 8 is
/// admitted since these are scalar formulas.
struct SvParams {
    int n;
    int m;
    int beta;
    Variant variant;
    double nu;
    double k;
    double rho;
    Partition tau;

    SvParams(int n_, int m_, int beta_, Variant v, double nu_, double k_, double rho_,
             Partition tau_);
};

// --- log densities ----------------------------------------------------
// All densities return log values; points outside the support (e.g. a
// gram point that fails the positive-definite pivot test, or tied
// singular values) yield -infinity rather than an error.

double riesz_logpdf(const HermitianPD& v, const RieszParams& p);

double kotzriesz_logpdf(const AlgMatrix& y, const KotzRieszParams& p);

double triesz_logpdf(const AlgMatrix& t, const TRieszParams& p);

double beta_riesz_logpdf(const HermitianPD& f, const BetaRieszParams& p);

/// Joint density of the ordered singular values alpha_1 > ... > alpha_m > 0.
double sv_triesz_logpdf(const std::vector<double>& alpha, const SvParams& p);

/// Joint density of the ordered eigenvalues gamma_i = alpha_i^2 of F = T*T.
double eig_beta_riesz_logpdf(const std::vector<double>& gamma, const SvParams& p);

/// Whitened gram matrix u(Sigma)^{-*} (Y-mu)* Theta^{-1} (Y-mu) u(Sigma)^{-1}
/// together with its (real) trace, the quadratic form appearing in the
/// Kotz-Riesz and T-Riesz kernels. Exposed for tests and samplers.
struct WhitenedGram {
    AlgMatrix z;
    double trace;
};
WhitenedGram whitened_gram(const AlgMatrix& y, const AlgMatrix& mu, const HermitianPD& theta,
                           const HermitianPD& sigma);

} // namespace rieszlab
