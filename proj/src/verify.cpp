#include "rieszlab/verify.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include <Eigen/Dense>

#include "rieszlab/sampler.hpp"
#include "rieszlab/specfun.hpp"
#include "rieszlab/stats.hpp"

namespace rieszlab {

namespace {

const double pi = std::numbers::pi;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

int coord_count(int n, int m, int beta) { return n * m * beta; }

} // namespace

CheckReport make_report(std::string name, double statistic, double target, double tolerance,
                        long n, std::string detail) {
    CheckReport r;
    r.name = std::move(name);
    r.statistic = statistic;
    r.target = target;
    r.tolerance = tolerance;
    r.n = n;
    r.passed = std::isfinite(statistic) && std::fabs(statistic - target) <= tolerance;
    r.detail = detail.empty() ? ("target " + fmt(target) + " within " + fmt(tolerance))
                              : std::move(detail);
    return r;
}

namespace {

// ---------------------------------------------------------------- matrices

// Integral of exp(logpdf) over P_2^beta in Cholesky coordinates
// (t11, t22 positive; beta coordinates of t12), with the exact volume
// element 2^m prod t_ii^{beta(m-i)+1}.
double integrate_pd2(const std::function<double(const HermitianPD&)>& logpdf, int beta,
                     double tol, QuadBudget& budget) {
    const Algebra alg = Algebra::of(beta);
    std::vector<Coord> dims{Coord::positive, Coord::positive};
    for (int c = 0; c < beta; ++c) dims.push_back(Coord::real_line);
    auto f = [&](const std::vector<double>& x) {
        UpperTriangular t(2, alg);
        t(0, 0) = Elem(x[0]);
        t(1, 1) = Elem(x[1]);
        for (int c = 0; c < beta; ++c) t(0, 1).set_coord(c, x[2 + c]);
        const HermitianPD v(t.mat().adjoint() * t.mat(), 1e-9);
        const double lp = logpdf(v);
        if (!std::isfinite(lp)) return 0.0;
        const double jac = 4.0 * std::pow(x[0], beta + 1) * x[1];
        return std::exp(lp) * jac;
    };
    return integrate_tensor(dims, f, tol, budget);
}

double integrate_pd1(const std::function<double(const HermitianPD&)>& logpdf, int beta,
                     double tol, QuadBudget& budget) {
    const Algebra alg = Algebra::of(beta);
    return integrate_half_line(
        [&](double v) {
            AlgMatrix a(1, 1, alg);
            a(0, 0) = Elem(v);
            const double lp = logpdf(HermitianPD(a));
            return std::isfinite(lp) ? std::exp(lp) : 0.0;
        },
        tol, budget);
}

double integrate_pd(const std::function<double(const HermitianPD&)>& logpdf, int m, int beta,
                    double tol, QuadBudget& budget) {
    if (m == 1) return integrate_pd1(logpdf, beta, tol, budget);
    if (m == 2 && beta <= 2) return integrate_pd2(logpdf, beta, tol, budget);
    throw DomainError("check_normalization: matrix quadrature supports m <= 2, beta <= 2");
}

// Integral of exp(logpdf) over the n x m coordinate space (<= 4 real
// coordinates). Dimensions 1 and 2 use adaptive rules, 3 and 4 the
// refined tensor rule.
double integrate_matrix_coords(const std::function<double(const AlgMatrix&)>& logpdf, int n,
                               int m, int beta, double tol, QuadBudget& budget) {
    const Algebra alg = Algebra::of(beta);
    const int dim = coord_count(n, m, beta);
    if (dim > 4)
        throw DomainError("check_normalization: more than 4 real coordinates");
    auto assemble = [&](const std::vector<double>& x) {
        AlgMatrix y(n, m, alg);
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                for (int c = 0; c < beta; ++c) y(i, j).set_coord(c, x[idx++]);
        return y;
    };
    auto eval = [&](const std::vector<double>& x) {
        const double lp = logpdf(assemble(x));
        return std::isfinite(lp) ? std::exp(lp) : 0.0;
    };
    if (dim == 1)
        return integrate_real_line([&](double v) { return eval({v}); }, tol, budget);
    if (dim == 2) {
        auto inner = [&](double v1) {
            return integrate_real_line([&](double v2) { return eval({v1, v2}); }, tol / 3,
                                       budget);
        };
        return integrate_real_line(inner, tol / 3, budget);
    }
    return integrate_tensor(std::vector<Coord>(dim, Coord::real_line), eval, tol, budget);
}

// Ordered positive nested quadrature for sv / eig joint densities, m <= 2.
double integrate_ordered(const std::function<double(const std::vector<double>&)>& logpdf,
                         int m, double tol, QuadBudget& budget) {
    if (m == 1)
        return integrate_half_line(
            [&](double a1) {
                const double lp = logpdf({a1});
                return std::isfinite(lp) ? std::exp(lp) : 0.0;
            },
            tol, budget);
    if (m != 2) throw DomainError("check_normalization: ordered quadrature supports m <= 2");
    auto inner = [&](double a1) {
        if (a1 <= 0) return 0.0;
        return integrate_adaptive(
            [&](double a2) {
                const double lp = logpdf({a1, a2});
                return std::isfinite(lp) ? std::exp(lp) : 0.0;
            },
            0.0, a1, tol / 3, budget);
    };
    return integrate_half_line(inner, tol / 3, budget);
}

CheckReport normalization_report(const std::string& name, double integral, double tol,
                                 const QuadBudget& budget) {
    return make_report(name, integral, 1.0, tol, 10'000'000 - budget.remaining,
                       "quadrature of exp(logpdf) over the support; target 1 within " +
                           fmt(tol));
}

} // namespace

CheckReport check_normalization_riesz(const RieszParams& p, double tol) {
    QuadBudget budget;
    const double integral = integrate_pd(
        [&](const HermitianPD& v) { return riesz_logpdf(v, p); }, p.dim(), p.beta, tol,
        budget);
    return normalization_report(std::string("normalization/riesz-") + variant_name(p.variant) +
                                    "/m" + std::to_string(p.dim()) + "/beta" +
                                    std::to_string(p.beta),
                                integral, tol, budget);
}

CheckReport check_normalization_kotzriesz(const KotzRieszParams& p, double tol) {
    QuadBudget budget;
    const double integral = integrate_matrix_coords(
        [&](const AlgMatrix& y) { return kotzriesz_logpdf(y, p); }, p.rows(), p.cols(),
        p.beta, tol, budget);
    return normalization_report(std::string("normalization/kotzriesz-") +
                                    variant_name(p.variant) + "/n" + std::to_string(p.rows()) +
                                    "m" + std::to_string(p.cols()) + "/beta" +
                                    std::to_string(p.beta),
                                integral, tol, budget);
}

CheckReport check_normalization_triesz(const TRieszParams& p, double tol) {
    QuadBudget budget;
    const double integral = integrate_matrix_coords(
        [&](const AlgMatrix& t) { return triesz_logpdf(t, p); }, p.rows(), p.cols(), p.beta,
        tol, budget);
    return normalization_report(std::string("normalization/triesz-") +
                                    variant_name(p.variant) + "/n" + std::to_string(p.rows()) +
                                    "m" + std::to_string(p.cols()) + "/beta" +
                                    std::to_string(p.beta),
                                integral, tol, budget);
}

CheckReport check_normalization_beta_riesz(const BetaRieszParams& p, double tol) {
    QuadBudget budget;
    const double integral = integrate_pd(
        [&](const HermitianPD& f) { return beta_riesz_logpdf(f, p); }, p.dim(), p.beta, tol,
        budget);
    return normalization_report(std::string("normalization/beta-riesz-") +
                                    variant_name(p.variant) + "/m" + std::to_string(p.dim()) +
                                    "/beta" + std::to_string(p.beta),
                                integral, tol, budget);
}

CheckReport check_normalization_sv(const SvParams& p, double tol) {
    QuadBudget budget;
    const double integral = integrate_ordered(
        [&](const std::vector<double>& a) { return sv_triesz_logpdf(a, p); }, p.m, tol,
        budget);
    return normalization_report(std::string("normalization/sv-triesz-") +
                                    variant_name(p.variant) + "/n" + std::to_string(p.n) +
                                    "m" + std::to_string(p.m) + "/beta" +
                                    std::to_string(p.beta),
                                integral, tol, budget);
}

CheckReport check_normalization_eig(const SvParams& p, double tol) {
    QuadBudget budget;
    const double integral = integrate_ordered(
        [&](const std::vector<double>& g) { return eig_beta_riesz_logpdf(g, p); }, p.m, tol,
        budget);
    return normalization_report(std::string("normalization/eig-beta-riesz-") +
                                    variant_name(p.variant) + "/n" + std::to_string(p.n) +
                                    "m" + std::to_string(p.m) + "/beta" +
                                    std::to_string(p.beta),
                                integral, tol, budget);
}

namespace {

double coord_of(const AlgMatrix& y, int i, int j, int c) { return y(i, j).coord(c); }

double det_of_coordinate_map(const std::function<AlgMatrix(const AlgMatrix&)>& map, int n,
                             int m, Algebra alg) {
    const int beta = alg.beta;
    const int dim = n * m * beta;
    Eigen::MatrixXd jac(dim, dim);
    int col = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int c = 0; c < beta; ++c) {
                AlgMatrix x(n, m, alg);
                x(i, j).set_coord(c, 1.0);
                const AlgMatrix y = map(x);
                int row = 0;
                for (int i2 = 0; i2 < n; ++i2)
                    for (int j2 = 0; j2 < m; ++j2)
                        for (int c2 = 0; c2 < beta; ++c2)
                            jac(row++, col) = coord_of(y, i2, j2, c2);
                ++col;
            }
    return jac.determinant();
}

} // namespace

CheckReport check_jacobian_linear(const AlgMatrix& a, const AlgMatrix& b) {
    const Algebra alg = a.algebra();
    alg.require_full_matrix("check_jacobian_linear");
    const int n = a.rows(), m = b.rows();
    if (a.cols() != n || b.cols() != m)
        throw ShapeMismatch("check_jacobian_linear: A and B must be square");

    const double det =
        det_of_coordinate_map([&](const AlgMatrix& x) { return a * x * b; }, n, m, alg);
    double log_target;
    try {
        log_target = 0.5 * m * alg.beta * logdet(HermitianPD::gram(a)) +
                     0.5 * n * alg.beta * logdet(HermitianPD::gram(b));
    } catch (const NotPositiveDefinite&) {
        throw SingularTransform("check_jacobian_linear: A or B is singular");
    }
    const double ratio = std::fabs(det) * std::exp(-log_target);
    return make_report("jacobian/linear/n" + std::to_string(n) + "m" + std::to_string(m) +
                           "/beta" + std::to_string(alg.beta),
                       ratio, 1.0, 1e-9, n * m * alg.beta,
                       "|det d(AXB)/dX| / (|A*A|^{m beta/2} |B*B|^{n beta/2}); target 1");
}

CheckReport check_jacobian_symmetric(const AlgMatrix& a) {
    const Algebra alg = a.algebra();
    alg.require_full_matrix("check_jacobian_symmetric");
    const int m = a.rows();
    if (a.cols() != m) throw ShapeMismatch("check_jacobian_symmetric: A must be square");
    const int beta = alg.beta;
    const int dim = m + beta * m * (m - 1) / 2;

    auto pack = [&](const AlgMatrix& s, Eigen::VectorXd& out) {
        int idx = 0;
        for (int i = 0; i < m; ++i) out(idx++) = s(i, i).w;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int c = 0; c < beta; ++c) out(idx++) = s(i, j).coord(c);
    };

    Eigen::MatrixXd jac(dim, dim);
    Eigen::VectorXd column(dim);
    int col = 0;
    auto basis_apply = [&](const AlgMatrix& x) {
        const AlgMatrix y = a * x * a.adjoint();
        pack(y.hermitian_part(), column);
        jac.col(col++) = column;
    };
    for (int i = 0; i < m; ++i) {
        AlgMatrix x(m, m, alg);
        x(i, i) = Elem(1.0);
        basis_apply(x);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int c = 0; c < beta; ++c) {
                AlgMatrix x(m, m, alg);
                Elem u;
                u.set_coord(c, 1.0);
                x(i, j) = u;
                x(j, i) = u.conj();
                basis_apply(x);
            }

    double log_target;
    try {
        log_target = (0.5 * (m - 1) * beta + 1.0) * logdet(HermitianPD::gram(a));
    } catch (const NotPositiveDefinite&) {
        throw SingularTransform("check_jacobian_symmetric: A is singular");
    }
    const double ratio = std::fabs(jac.determinant()) * std::exp(-log_target);
    return make_report("jacobian/symmetric/m" + std::to_string(m) + "/beta" +
                           std::to_string(beta),
                       ratio, 1.0, 1e-9, dim,
                       "|det d(AXA*)/dX| / |A*A|^{(m-1)beta/2 + 1}; target 1");
}

CheckReport check_svd_measure(int n, int m, int beta, RngStream& rng, long n_samples) {
    const Algebra alg = Algebra::of(beta);
    alg.require_full_matrix("check_svd_measure");
    const double sd = 1.0 / std::sqrt(2.0 * beta);

    if (m == 1) {
        // d^2 ~ Gamma(n beta / 2, beta) under the implied chi-type law
        std::vector<double> d2(n_samples);
        for (double& v : d2) {
            const AlgMatrix x = gaussian_matrix(rng, n, 1, alg, sd);
            const double s = singular_values(x)[0];
            v = s * s;
        }
        const KsResult ks =
            ks_test(d2, [&](double x) { return gamma_cdf(x, 0.5 * n * beta, beta); });
        return make_report("svd-measure/ks/n" + std::to_string(n) + "m1/beta" +
                               std::to_string(beta),
                           ks.p_value, 1.0, 0.999, n_samples,
                           "KS of squared singular value against Gamma(n beta/2, beta); "
                           "pass iff p > 0.001 (D=" + fmt(ks.statistic) + ")");
    }

    if (m != 2) throw DomainError("check_svd_measure: supports m <= 2");
    // Implied ordered singular-value density of the Gaussian ensemble:
    // (beta/pi)^{beta m n / 2} 2^{-m} pi^{varrho} Vol(V_{m,n}) Vol(V_{m,m})
    //   e^{-beta sum d_i^2} prod d_i^{beta(n-m+1)-1} prod (d_i^2-d_j^2)^beta
    const double varrho = (beta == 1) ? 0.0 : (beta == 2) ? -m : (beta == 4) ? -2.0 * m
                                                                             : -4.0 * m;
    const double logc = 0.5 * beta * m * n * std::log(beta / pi) - m * std::log(2.0) +
                        varrho * std::log(pi) + log_stiefel_volume(n, m, beta) +
                        log_stiefel_volume(m, m, beta);
    auto logpdf = [&](const std::vector<double>& d) {
        double lp = logc;
        for (int i = 0; i < m; ++i) {
            lp += (beta * (n - m + 1) - 1.0) * std::log(d[i]) - beta * d[i] * d[i];
        }
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                lp += beta * std::log(d[i] * d[i] - d[j] * d[j]);
        return lp;
    };
    QuadBudget budget;
    const double integral = integrate_ordered(logpdf, m, 1e-6, budget);
    return make_report("svd-measure/normalization/n" + std::to_string(n) + "m2/beta" +
                           std::to_string(beta),
                       integral, 1.0, 1e-5, 10'000'000 - budget.remaining,
                       "implied Gaussian singular-value density integrates to 1 "
                       "(pins the pi^varrho factor)");
}

CheckReport check_gamma_integral(double a, const WeightVector& kappa, int beta, int m,
                                 RngStream& rng, long n_samples) {
    if (m == 1) {
        QuadBudget budget;
        const double k = kappa[0];
        const double integral = integrate_half_line(
            [&](double v) { return std::exp(-v + (a + k - 1.0) * std::log(v)); }, 1e-12,
            budget);
        const double ratio =
            integral / std::exp(lgamma_m_weighted(a, kappa, beta, 1, WeightSign::plus));
        return make_report("gamma-integral/quadrature/m1",
                           ratio, 1.0, 1e-10, 10'000'000 - budget.remaining,
                           "int_0^inf e^{-v} v^{a+k-1} dv / Gamma(a+k); target 1");
    }
    if (m != 2) throw DomainError("check_gamma_integral: supports m <= 2");

    // E[q_kappa(A)] under the weight-free rate-1 proposal equals the
    // generalized Pochhammer [a]_kappa^beta.
    const Algebra alg = Algebra::of(beta);
    const HermitianPD eye = HermitianPD::identity(m, alg);
    const WeightVector zero = WeightVector::zero(m);
    std::vector<double> q(n_samples);
    for (double& v : q) {
        const HermitianPD w = sample_riesz_matrix(rng, a, zero, eye, beta, Variant::I);
        v = std::exp(log_q_kappa(HermitianPD(w.mat() * static_cast<double>(beta)), kappa));
    }
    const Summary s = summarize(q);
    const double target = std::exp(log_gen_pochhammer(a, kappa, beta));
    const double rel = s.mean / target - 1.0;
    const double tol = std::max(0.01, 3.0 * s.std_error / target);
    return make_report("gamma-integral/mc/m2/beta" + std::to_string(beta), rel, 0.0, tol,
                       n_samples,
                       "importance estimate of Gamma_m[a,kappa]/Gamma_m[a] vs the "
                       "generalized Pochhammer; relative error (se=" +
                           fmt(s.std_error / target) + ")");
}

CheckReport check_spherical_identity(const Partition& tau, const HermitianPD& l, int beta,
                                     RngStream& rng, long n_samples) {
    const int m = l.dim();
    const McEstimate est = spherical_average_q(rng, tau, l, beta, n_samples);
    const double target =
        jack_C(tau, eigenvalues_sym(l), beta) / jack_C_identity(tau, m, beta);
    const double z = (est.mean - target) / std::max(est.std_error, 1e-300);
    return make_report("spherical-identity/m" + std::to_string(m) + "/beta" +
                           std::to_string(beta) + "/tau" + tau.to_string(),
                       z, 0.0, 3.0, n_samples,
                       "z-score of the Haar average of q_tau against the zonal ratio " +
                           fmt(target));
}

namespace {

int thread_cap() {
    if (const char* env = std::getenv("RIESZ_LAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

HermitianPD diag_pd(const std::vector<double>& d, Algebra alg) {
    AlgMatrix a(static_cast<int>(d.size()), static_cast<int>(d.size()), alg);
    for (size_t i = 0; i < d.size(); ++i) a(static_cast<int>(i), static_cast<int>(i)) = Elem(d[i]);
    return HermitianPD(a);
}

} // namespace

std::vector<CheckReport> default_check_suite(std::uint64_t seed) {
    const Algebra re = Algebra::real();
    const Algebra cx = Algebra::complex();
    std::vector<std::function<CheckReport(RngStream&)>> jobs;

    // --- normalizations, scalar cases at 1e-8
    jobs.push_back([=](RngStream&) {
        return check_normalization_riesz(
            RieszParams(2.0, WeightVector::zero(1), HermitianPD::identity(1, re), 1,
                        Variant::I),
            1e-8);
    });
    jobs.push_back([=](RngStream&) {
        return check_normalization_riesz(
            RieszParams(2.3, WeightVector({0.8}), diag_pd({1.7}, re), 1, Variant::II), 1e-8);
    });
    jobs.push_back([=](RngStream&) {
        return check_normalization_triesz(
            TRieszParams(3.0, 0.0, WeightVector::zero(1), 1.0 / 3.0, AlgMatrix(1, 1, re),
                         HermitianPD::identity(1, re), HermitianPD::identity(1, re),
                         Variant::I),
            1e-8);
    });
    jobs.push_back([=](RngStream&) {
        return check_normalization_triesz(
            TRieszParams(4.0, 0.6, WeightVector({0.3}), 0.8, AlgMatrix(1, 1, re),
                         HermitianPD::identity(1, re), HermitianPD::identity(1, re),
                         Variant::II),
            1e-8);
    });
    jobs.push_back([=](RngStream&) {
        return check_normalization_kotzriesz(
            KotzRieszParams(WeightVector({1.0}), AlgMatrix(2, 1, re),
                            HermitianPD::identity(2, re), HermitianPD::identity(1, re),
                            Variant::I),
            1e-8);
    });
    jobs.push_back([=](RngStream&) {
        return check_normalization_beta_riesz(
            BetaRieszParams(1, 3.0, 0.0, WeightVector::zero(1), 1.0,
                            HermitianPD::identity(1, re), Variant::I),
            1e-8);
    });
    jobs.push_back([=](RngStream&) {
        return check_normalization_beta_riesz(
            BetaRieszParams(2, 3.5, -0.4, WeightVector({0.5}), 0.9, diag_pd({1.3}, re),
                            Variant::II),
            1e-8);
    });
    jobs.push_back([=](RngStream&) {
        return check_normalization_sv(
            SvParams(1, 1, 1, Variant::I, 3.0, 0.0, 1.0 / 3.0, Partition()), 1e-8);
    });
    jobs.push_back([=](RngStream&) {
        // beta = 2 scalar sv case: the pi^varrho constant enters here
        return check_normalization_sv(
            SvParams(2, 1, 2, Variant::I, 3.0, 0.2, 0.7, Partition({1})), 1e-8);
    });

    // --- normalizations, m=2 cases at 1e-5
    jobs.push_back([=](RngStream&) {
        return check_normalization_riesz(
            RieszParams(2.5, WeightVector({1.0, 0.0}), diag_pd({1.0, 2.0}, re), 1,
                        Variant::I),
            1e-5);
    });
    jobs.push_back([=](RngStream&) {
        return check_normalization_triesz(
            TRieszParams(5.0, 0.0, WeightVector({1.0}), 1.0, AlgMatrix(2, 1, re),
                         HermitianPD::identity(2, re), HermitianPD::identity(1, re),
                         Variant::I),
            1e-7);
    });
    jobs.push_back([=](RngStream&) {
        return check_normalization_beta_riesz(
            BetaRieszParams(3, 4.0, 0.0, WeightVector({1.0, 0.0}), 1.0,
                            HermitianPD::identity(2, re), Variant::I),
            1e-5);
    });
    jobs.push_back([=](RngStream&) {
        return check_normalization_sv(
            SvParams(3, 2, 1, Variant::I, 4.0, 0.0, 1.0, Partition({1})), 1e-5);
    });
    jobs.push_back([=](RngStream&) {
        return check_normalization_eig(
            SvParams(3, 2, 1, Variant::I, 4.0, 0.0, 1.0, Partition({1})), 1e-5);
    });

    // --- Jacobian propositions
    jobs.push_back([=](RngStream& rng) {
        CheckReport worst;
        for (int rep = 0; rep < 10; ++rep) {
            const int beta = (rep % 2) ? 2 : 1;
            const Algebra alg = Algebra::of(beta);
            const int n = 2 + rep % 2, m = 2;
            const CheckReport r = check_jacobian_linear(gaussian_matrix(rng, n, n, alg, 1.0),
                                                        gaussian_matrix(rng, m, m, alg, 1.0));
            if (rep == 0 || std::fabs(r.statistic - 1.0) > std::fabs(worst.statistic - 1.0))
                worst = r;
        }
        worst.name = "jacobian/linear/random-suite";
        return worst;
    });
    jobs.push_back([=](RngStream& rng) {
        CheckReport worst;
        for (int rep = 0; rep < 10; ++rep) {
            const int beta = (rep % 2) ? 2 : 1;
            const Algebra alg = Algebra::of(beta);
            const CheckReport r =
                check_jacobian_symmetric(gaussian_matrix(rng, 2 + rep % 2, 2 + rep % 2, alg, 1.0));
            if (rep == 0 || std::fabs(r.statistic - 1.0) > std::fabs(worst.statistic - 1.0))
                worst = r;
        }
        worst.name = "jacobian/symmetric/random-suite";
        return worst;
    });

    // --- SVD measure
    jobs.push_back([=](RngStream& rng) { return check_svd_measure(3, 1, 1, rng, 20000); });
    jobs.push_back([=](RngStream& rng) { return check_svd_measure(2, 1, 2, rng, 20000); });
    jobs.push_back([=](RngStream& rng) { return check_svd_measure(3, 2, 1, rng, 0); });
    jobs.push_back([=](RngStream& rng) { return check_svd_measure(2, 2, 2, rng, 0); });

    // --- gamma integrals
    jobs.push_back([=](RngStream& rng) {
        return check_gamma_integral(3.5, WeightVector({1.2}), 1, 1, rng, 0);
    });
    jobs.push_back([=](RngStream& rng) {
        return check_gamma_integral(3.0, WeightVector({1.0, 0.0}), 1, 2, rng, 200000);
    });

    // --- spherical identities
    jobs.push_back([=](RngStream& rng) {
        return check_spherical_identity(Partition({2, 1}), diag_pd({2.0, 1.0}, re), 1, rng,
                                        50000);
    });
    jobs.push_back([=](RngStream& rng) {
        return check_spherical_identity(Partition({2}), diag_pd({3.0, 0.5}, cx), 2, rng,
                                        50000);
    });
    jobs.push_back([=](RngStream& rng) {
        return check_spherical_identity(Partition({2, 1, 1}), diag_pd({2.0, 1.0, 0.5}, re), 1,
                                        rng, 50000);
    });

    // Deterministic fan-out: job i always runs on stream i.
    std::vector<CheckReport> reports(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            RngStream rng(seed, i + 1);
            try {
                reports[i] = jobs[i](rng);
            } catch (const std::exception& e) {
                reports[i] = make_report("job-" + std::to_string(i) + "/exception", 1.0, 0.0,
                                         0.0, 0, e.what());
            }
        }
    };
    const int nthreads = std::min<int>(thread_cap(), static_cast<int>(jobs.size()));
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
    return reports;
}

} // namespace rieszlab
