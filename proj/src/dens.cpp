#include "rieszlab/dens.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "rieszlab/specfun.hpp"

namespace rieszlab {

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();
const double log_pi = std::log(std::numbers::pi);

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// log q_kappa of a gram-type argument, evaluated on the closure of the
// cone; a point where the generalized power has no finite limit reports
// -inf (zero density mass) instead of an error.
std::optional<double> log_q_or_boundary(const AlgMatrix& z, const WeightVector& kappa,
                                        bool inverse_argument) {
    if (kappa.is_zero()) return 0.0;
    const HermitianPD zh(z, 1e-9);
    return inverse_argument ? try_log_q_kappa_inv(zh, kappa) : try_log_q_kappa(zh, kappa);
}

double varrho_svd(int beta, int m) {
    switch (beta) {
        case 1: return 0.0;
        case 2: return -m;
        case 4: return -2.0 * m;
        default: return -4.0 * m;
    }
}

} // namespace

RieszParams::RieszParams(double a_, WeightVector kappa_, HermitianPD xi_, int beta_,
                         Variant v)
    : a(a_), kappa(std::move(kappa_)), xi(std::move(xi_)), beta(beta_), variant(v) {
    const int m = xi.dim();
    if (kappa.size() != m) throw DomainError("RieszParams: kappa length must equal dim of Xi");
    if (xi.beta() != beta) throw DomainError("RieszParams: Xi algebra does not match beta");
    const double edge = 0.5 * (m - 1) * beta;
    if (variant == Variant::I && !(a > edge - kappa.last()))
        throw DomainError("type I requires a > (m-1)beta/2 - k_m (a=" + fmt(a) +
                          ", bound=" + fmt(edge - kappa.last()) + ")");
    if (variant == Variant::II && !(a > edge + kappa.first()))
        throw DomainError("type II requires a > (m-1)beta/2 + k_1 (a=" + fmt(a) +
                          ", bound=" + fmt(edge + kappa.first()) + ")");
}

KotzRieszParams::KotzRieszParams(WeightVector kappa_, AlgMatrix mu_, HermitianPD theta_,
                                 HermitianPD sigma_, Variant v)
    : kappa(std::move(kappa_)), mu(std::move(mu_)), theta(std::move(theta_)),
      sigma(std::move(sigma_)), beta(mu.beta()), variant(v) {
    const int n = mu.rows(), m = mu.cols();
    if (theta.dim() != n || sigma.dim() != m)
        throw ShapeMismatch("KotzRieszParams: Theta must be n x n and Sigma m x m");
    if (theta.beta() != beta || sigma.beta() != beta)
        throw DomainError("KotzRieszParams: algebra mismatch between mu, Theta, Sigma");
    if (kappa.size() != m) throw DomainError("KotzRieszParams: kappa length must equal m");
    const double a = 0.5 * n * beta, edge = 0.5 * (m - 1) * beta;
    if (v == Variant::I && !(a > edge - kappa.last()))
        throw DomainError("type I requires n*beta/2 > (m-1)*beta/2 - k_m (n*beta/2=" +
                          fmt(a) + ", bound=" + fmt(edge - kappa.last()) + ")");
    if (v == Variant::II && !(a > edge + kappa.first()))
        throw DomainError("type II requires n*beta/2 > (m-1)*beta/2 + k_1 (n*beta/2=" +
                          fmt(a) + ", bound=" + fmt(edge + kappa.first()) + ")");
}

TRieszParams::TRieszParams(double nu_, double k_, WeightVector tau_, double rho_,
                           AlgMatrix mu_, HermitianPD theta_, HermitianPD sigma_, Variant v)
    : nu(nu_), k(k_), tau(std::move(tau_)), rho(rho_), mu(std::move(mu_)),
      theta(std::move(theta_)), sigma(std::move(sigma_)), beta(mu.beta()), variant(v) {
    const int n = mu.rows(), m = mu.cols();
    if (theta.dim() != n || sigma.dim() != m)
        throw ShapeMismatch("TRieszParams: Theta must be n x n and Sigma m x m");
    if (theta.beta() != beta || sigma.beta() != beta)
        throw DomainError("TRieszParams: algebra mismatch between mu, Theta, Sigma");
    if (tau.size() != m) throw DomainError("TRieszParams: tau length must equal m");
    if (!(rho > 0)) throw DomainError("rho must be positive (rho=" + fmt(rho) + ")");
    const double a = 0.5 * n * beta, edge = 0.5 * (m - 1) * beta;
    if (v == Variant::I) {
        if (!(0.5 * nu * beta + k > 0))
            throw DomainError("type I requires nu*beta/2 + k > 0 (got " +
                              fmt(0.5 * nu * beta + k) + ")");
        if (!(a > edge - tau.last()))
            throw DomainError("type I requires n*beta/2 > (m-1)*beta/2 - t_m (n*beta/2=" +
                              fmt(a) + ", bound=" + fmt(edge - tau.last()) + ")");
    } else {
        if (!(0.5 * nu * beta - k > 0))
            throw DomainError("type II requires nu*beta/2 - k > 0 (got " +
                              fmt(0.5 * nu * beta - k) + ")");
        if (!(a > edge + tau.first()))
            throw DomainError("type II requires n*beta/2 > (m-1)*beta/2 + t_1 (n*beta/2=" +
                              fmt(a) + ", bound=" + fmt(edge + tau.first()) + ")");
    }
}

BetaRieszParams::BetaRieszParams(int n_, double nu_, double k_, WeightVector tau_,
                                 double rho_, HermitianPD sigma_, Variant v)
    : n(n_), nu(nu_), k(k_), tau(std::move(tau_)), rho(rho_), sigma(std::move(sigma_)),
      beta(sigma.beta()), variant(v) {
    const int m = sigma.dim();
    if (n < m) throw DomainError("BetaRieszParams: requires n >= m");
    // Reuse the T-Riesz existence conditions (mu = 0, Theta = I_n).
    TRieszParams(nu, k, tau, rho, AlgMatrix(n, m, Algebra::of(beta)),
                 HermitianPD::identity(n, Algebra::of(beta)), sigma, v);
}

SvParams::SvParams(int n_, int m_, int beta_, Variant v, double nu_, double k_, double rho_,
                   Partition tau_)
    : n(n_), m(m_), beta(beta_), variant(v), nu(nu_), k(k_), rho(rho_), tau(std::move(tau_)) {
    Algebra::of(beta);
    if (n < m || m < 1) throw DomainError("SvParams: requires n >= m >= 1");
    if (tau.length() > m) throw TooManyParts("SvParams: tau has more parts than m");
    if (!(rho > 0)) throw DomainError("rho must be positive (rho=" + fmt(rho) + ")");
    const double a = 0.5 * n * beta, edge = 0.5 * (m - 1) * beta;
    const WeightVector tw = tau.as_weight(m);
    if (v == Variant::I) {
        if (!(0.5 * nu * beta + k > 0))
            throw DomainError("type I requires nu*beta/2 + k > 0 (got " +
                              fmt(0.5 * nu * beta + k) + ")");
        if (!(a > edge - tw.last()))
            throw DomainError("type I requires n*beta/2 > (m-1)*beta/2 - t_m");
    } else {
        if (!(0.5 * nu * beta - k > 0))
            throw DomainError("type II requires nu*beta/2 - k > 0 (got " +
                              fmt(0.5 * nu * beta - k) + ")");
        if (!(a > edge + tw.first()))
            throw DomainError("type II requires n*beta/2 > (m-1)*beta/2 + t_1");
    }
}

WhitenedGram whitened_gram(const AlgMatrix& y, const AlgMatrix& mu, const HermitianPD& theta,
                           const HermitianPD& sigma) {
    if (y.rows() != mu.rows() || y.cols() != mu.cols())
        throw ShapeMismatch("whitened_gram: point shape does not match mu");
    const AlgMatrix d = y - mu;
    const UpperTriangular ut = cholesky_upper(theta);
    const UpperTriangular us = cholesky_upper(sigma);
    // Theta^{-1} (Y-mu) = ut^{-1} (ut^{-*} (Y-mu))
    const AlgMatrix w = d.adjoint() * solve_upper_left(ut, solve_upper_adjoint_left(ut, d));
    // Z = us^{-*} W us^{-1}
    AlgMatrix z = solve_upper_adjoint_left(us, solve_upper_right(w, us));
    z = z.hermitian_part();
    WhitenedGram g{z, z.trace_real()};
    return g;
}

double riesz_logpdf(const HermitianPD& v, const RieszParams& p) {
    const int m = p.dim();
    if (v.dim() != m || v.beta() != p.beta)
        throw ShapeMismatch("riesz_logpdf: point dimension or algebra mismatch");

    std::vector<double> lam;
    try {
        lam = ldl_pivots(v);
    } catch (const NotPositiveDefinite&) {
        return neg_inf;
    }
    double logdet_v = 0;
    for (double l : lam) logdet_v += std::log(l);

    const UpperTriangular uxi = cholesky_upper(p.xi);
    // tr(Xi^{-1} V)
    const AlgMatrix xinv_v =
        solve_upper_left(uxi, solve_upper_adjoint_left(uxi, v.mat()));
    const double tr = xinv_v.trace_real();

    const double log_beta = std::log(static_cast<double>(p.beta));
    const double expo = p.a - 0.5 * (m - 1) * p.beta - 1.0;

    double logc;
    if (p.variant == Variant::I) {
        logc = (p.a * m + p.kappa.sum()) * log_beta -
               lgamma_m_weighted(p.a, p.kappa, p.beta, m, WeightSign::plus) -
               p.a * logdet(p.xi) - log_q_kappa(p.xi, p.kappa);
    } else {
        logc = (p.a * m - p.kappa.sum()) * log_beta -
               lgamma_m_weighted(p.a, p.kappa, p.beta, m, WeightSign::minus) -
               p.a * logdet(p.xi) - log_q_kappa_inv(p.xi, p.kappa);
    }
    const std::optional<double> weight_term = p.variant == Variant::I
                                                  ? try_log_q_kappa(v, p.kappa)
                                                  : try_log_q_kappa_inv(v, p.kappa);
    if (!weight_term) return neg_inf;   // no finite limit on the cone boundary
    return logc - p.beta * tr + expo * logdet_v + *weight_term;
}

double kotzriesz_logpdf(const AlgMatrix& y, const KotzRieszParams& p) {
    const int n = p.rows(), m = p.cols();
    if (y.rows() != n || y.cols() != m || y.beta() != p.beta)
        throw ShapeMismatch("kotzriesz_logpdf: point shape or algebra mismatch");

    const WhitenedGram g = whitened_gram(y, p.mu, p.theta, p.sigma);
    const double a = 0.5 * n * p.beta;
    const double log_beta = std::log(static_cast<double>(p.beta));

    double logc;
    std::optional<double> qterm;
    if (p.variant == Variant::I) {
        logc = (0.5 * m * n * p.beta + p.kappa.sum()) * log_beta + lgamma_m(a, p.beta, m) -
               0.5 * m * n * p.beta * log_pi -
               lgamma_m_weighted(a, p.kappa, p.beta, m, WeightSign::plus) -
               a * logdet(p.sigma) - 0.5 * m * p.beta * logdet(p.theta);
        qterm = log_q_or_boundary(g.z, p.kappa, false);
    } else {
        logc = (0.5 * m * n * p.beta - p.kappa.sum()) * log_beta + lgamma_m(a, p.beta, m) -
               0.5 * m * n * p.beta * log_pi -
               lgamma_m_weighted(a, p.kappa, p.beta, m, WeightSign::minus) -
               a * logdet(p.sigma) - 0.5 * m * p.beta * logdet(p.theta);
        qterm = log_q_or_boundary(g.z, p.kappa, true);
    }
    if (!qterm) return neg_inf;
    return logc - p.beta * g.trace + *qterm;
}

double triesz_logpdf(const AlgMatrix& t, const TRieszParams& p) {
    const int n = p.rows(), m = p.cols();
    if (t.rows() != n || t.cols() != m || t.beta() != p.beta)
        throw ShapeMismatch("triesz_logpdf: point shape or algebra mismatch");

    const WhitenedGram g = whitened_gram(t, p.mu, p.theta, p.sigma);
    const double a = 0.5 * n * p.beta;
    const double ts = p.tau.sum();

    double expo, logc;
    std::optional<double> qterm;
    if (p.variant == Variant::I) {
        expo = 0.5 * (p.nu + m * n) * p.beta + p.k + ts;
        logc = lgamma_m(a, p.beta, m) + std::lgamma(expo) +
               (0.5 * m * n * p.beta + ts) * std::log(p.rho) -
               0.5 * m * n * p.beta * log_pi -
               lgamma_m_weighted(a, p.tau, p.beta, m, WeightSign::plus) -
               std::lgamma(0.5 * p.nu * p.beta + p.k) - 0.5 * n * p.beta * logdet(p.sigma) -
               0.5 * m * p.beta * logdet(p.theta);
        qterm = log_q_or_boundary(g.z, p.tau, false);
    } else {
        expo = 0.5 * (p.nu + m * n) * p.beta - p.k - ts;
        logc = lgamma_m(a, p.beta, m) + std::lgamma(expo) +
               (0.5 * m * n * p.beta - ts) * std::log(p.rho) -
               0.5 * m * n * p.beta * log_pi -
               lgamma_m_weighted(a, p.tau, p.beta, m, WeightSign::minus) -
               std::lgamma(0.5 * p.nu * p.beta - p.k) - 0.5 * n * p.beta * logdet(p.sigma) -
               0.5 * m * p.beta * logdet(p.theta);
        qterm = log_q_or_boundary(g.z, p.tau, true);
    }
    if (!qterm) return neg_inf;
    return logc - expo * std::log1p(p.rho * g.trace) + *qterm;
}

double beta_riesz_logpdf(const HermitianPD& f, const BetaRieszParams& p) {
    const int m = p.dim(), n = p.n;
    if (f.dim() != m || f.beta() != p.beta)
        throw ShapeMismatch("beta_riesz_logpdf: point dimension or algebra mismatch");

    double logdet_f;
    try {
        logdet_f = logdet(f);
    } catch (const NotPositiveDefinite&) {
        return neg_inf;
    }

    const UpperTriangular us = cholesky_upper(p.sigma);
    const AlgMatrix sinv_f = solve_upper_left(us, solve_upper_adjoint_left(us, f.mat()));
    const double tr = sinv_f.trace_real();

    const double a = 0.5 * n * p.beta;
    const double ts = p.tau.sum();

    double expo, logc;
    if (p.variant == Variant::I) {
        expo = 0.5 * (m * n + p.nu) * p.beta + p.k + ts;
        logc = std::lgamma(expo) + (0.5 * m * n * p.beta + ts) * std::log(p.rho) -
               lgamma_m_weighted(a, p.tau, p.beta, m, WeightSign::plus) -
               std::lgamma(0.5 * p.nu * p.beta + p.k) - a * logdet(p.sigma) -
               log_q_kappa(p.sigma, p.tau);
    } else {
        expo = 0.5 * (m * n + p.nu) * p.beta - p.k - ts;
        logc = std::lgamma(expo) + (0.5 * m * n * p.beta - ts) * std::log(p.rho) -
               lgamma_m_weighted(a, p.tau, p.beta, m, WeightSign::minus) -
               std::lgamma(0.5 * p.nu * p.beta - p.k) - a * logdet(p.sigma) -
               log_q_kappa_inv(p.sigma, p.tau);
    }
    const std::optional<double> weight_term = p.variant == Variant::I
                                                  ? try_log_q_kappa(f, p.tau)
                                                  : try_log_q_kappa_inv(f, p.tau);
    if (!weight_term) return neg_inf;   // no finite limit on the cone boundary
    return logc + (0.5 * (n - m + 1) * p.beta - 1.0) * logdet_f -
           expo * std::log1p(p.rho * tr) + *weight_term;
}

double sv_triesz_logpdf(const std::vector<double>& alpha, const SvParams& p) {
    const int m = p.m, n = p.n;
    if (static_cast<int>(alpha.size()) != m)
        throw ShapeMismatch("sv_triesz_logpdf: expected " + std::to_string(m) + " values");
    for (int i = 0; i < m; ++i) {
        if (!(alpha[i] > 0)) return neg_inf;
        if (i > 0 && alpha[i] > alpha[i - 1])
            throw UnorderedInput("sv_triesz_logpdf: singular values must be decreasing");
    }
    for (int i = 0; i + 1 < m; ++i)
        if (alpha[i] == alpha[i + 1]) return neg_inf;   // Vandermonde zero

    const double ts = p.tau.weight();
    const double a = 0.5 * n * p.beta;
    const WeightVector tw = p.tau.as_weight(m);

    double expo, logc;
    if (p.variant == Variant::I) {
        expo = 0.5 * (p.nu + m * n) * p.beta + p.k + ts;
        logc = m * std::log(2.0) + (0.5 * p.beta * m * m + varrho_svd(p.beta, m)) * log_pi +
               std::lgamma(expo) + (0.5 * m * n * p.beta + ts) * std::log(p.rho) -
               lgamma_m(0.5 * p.beta * m, p.beta, m) -
               lgamma_m_weighted(a, tw, p.beta, m, WeightSign::plus) -
               std::lgamma(0.5 * p.nu * p.beta + p.k);
    } else {
        expo = 0.5 * (p.nu + m * n) * p.beta - p.k - ts;
        logc = m * std::log(2.0) + (0.5 * p.beta * m * m + varrho_svd(p.beta, m)) * log_pi +
               std::lgamma(expo) + (0.5 * m * n * p.beta - ts) * std::log(p.rho) -
               lgamma_m(0.5 * p.beta * m, p.beta, m) -
               lgamma_m_weighted(a, tw, p.beta, m, WeightSign::minus) -
               std::lgamma(0.5 * p.nu * p.beta - p.k);
    }

    double val = logc;
    double sumsq = 0;
    for (int i = 0; i < m; ++i) {
        val += (p.beta * (n - m + 1) - 1.0) * std::log(alpha[i]);
        sumsq += alpha[i] * alpha[i];
    }
    val -= expo * std::log1p(p.rho * sumsq);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            val += p.beta * std::log(alpha[i] * alpha[i] - alpha[j] * alpha[j]);

    if (p.tau.weight() > 0) {
        std::vector<double> arg(m);
        for (int i = 0; i < m; ++i) {
            const double d2 = alpha[i] * alpha[i];
            arg[i] = (p.variant == Variant::I) ? d2 : 1.0 / d2;
        }
        val += std::log(jack_C(p.tau, arg, p.beta)) -
               std::log(jack_C_identity(p.tau, m, p.beta));
    }
    return val;
}

double eig_beta_riesz_logpdf(const std::vector<double>& gamma, const SvParams& p) {
    if (static_cast<int>(gamma.size()) != p.m)
        throw ShapeMismatch("eig_beta_riesz_logpdf: expected " + std::to_string(p.m) +
                            " values");
    std::vector<double> alpha(gamma.size());
    double jac = 0;
    for (size_t i = 0; i < gamma.size(); ++i) {
        if (!(gamma[i] > 0)) return neg_inf;
        if (i > 0 && gamma[i] > gamma[i - 1])
            throw UnorderedInput("eig_beta_riesz_logpdf: eigenvalues must be decreasing");
        alpha[i] = std::sqrt(gamma[i]);
        jac += -std::log(2.0) - 0.5 * std::log(gamma[i]);
    }
    return sv_triesz_logpdf(alpha, p) + jac;
}

} // namespace rieszlab
