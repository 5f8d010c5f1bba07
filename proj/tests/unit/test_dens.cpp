#include "doctest.h"

#include <cmath>
#include <numbers>

#include "rieszlab/dens.hpp"
#include "rieszlab/quadrature.hpp"
#include "rieszlab/specfun.hpp"
#include "test_helpers.hpp"

using namespace rieszlab;
using rieszlab::testing::random_spd;

namespace {

const double pi = std::numbers::pi;

HermitianPD scalar_pd(double v, int beta = 1) {
    AlgMatrix a(1, 1, Algebra::of(beta));
    a(0, 0) = Elem(v);
    return HermitianPD(a);
}

AlgMatrix scalar_mat(double v, int beta = 1) {
    AlgMatrix a(1, 1, Algebra::of(beta));
    a(0, 0) = Elem(v);
    return a;
}

double log_gamma_pdf(double x, double shape, double rate) {
    return shape * std::log(rate) - std::lgamma(shape) + (shape - 1.0) * std::log(x) -
           rate * x;
}

double log_student_t_pdf(double x, double nu) {
    return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
           0.5 * std::log(nu * pi) - 0.5 * (nu + 1.0) * std::log1p(x * x / nu);
}

// real Wishart_m(n, Sigma) log density, coded from the classical formula
double log_wishart_pdf(const HermitianPD& v, double n, const HermitianPD& sigma) {
    const int m = v.dim();
    double lg = 0.25 * m * (m - 1) * std::log(pi);
    for (int i = 1; i <= m; ++i) lg += std::lgamma(0.5 * (n + 1 - i));
    const UpperTriangular us = cholesky_upper(sigma);
    const AlgMatrix sinv_v = solve_upper_left(us, solve_upper_adjoint_left(us, v.mat()));
    return -0.5 * n * m * std::log(2.0) - lg - 0.5 * n * logdet(sigma) +
           0.5 * (n - m - 1) * logdet(v) - 0.5 * sinv_v.trace_real();
}

} // namespace

TEST_CASE("riesz_logpdf: scalar gamma reductions") {
    // a=2, k=0, xi=1: Gamma(2,1); pdf(1) = e^{-1}
    const RieszParams p1(2.0, WeightVector::zero(1), HermitianPD::identity(1, Algebra::real()),
                         1, Variant::I);
    CHECK(riesz_logpdf(scalar_pd(1.0), p1) == doctest::Approx(-1.0).epsilon(1e-13));
    // a=2, k=1: Gamma(3,1); pdf(1) = e^{-1}/2
    const RieszParams p2(2.0, WeightVector({1.0}), HermitianPD::identity(1, Algebra::real()),
                         1, Variant::I);
    CHECK(riesz_logpdf(scalar_pd(1.0), p2) ==
          doctest::Approx(std::log(0.5) - 1.0).epsilon(1e-12));

    // general scalar check, both variants, against the gamma closed form
    for (const Variant var : {Variant::I, Variant::II}) {
        for (int beta : {1, 2, 4}) {
            const double a = 2.6, k = 0.7, xi = 1.9;
            const RieszParams p(a, WeightVector({k}), scalar_pd(xi, beta), beta, var);
            const double shape = var == Variant::I ? a + k : a - k;
            for (double v : {0.3, 1.0, 4.2}) {
                CHECK(riesz_logpdf(scalar_pd(v, beta), p) ==
                      doctest::Approx(log_gamma_pdf(v, shape, beta / xi)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("riesz_logpdf: kappa=0 equals Wishart with Xi = 2 Sigma0") {
    RngStream rng(301);
    for (int m : {2, 3}) {
        const HermitianPD sigma0 = random_spd(rng, m, Algebra::real());
        const HermitianPD xi(sigma0.mat() * 2.0);
        const double a = 0.5 * (m + 3);   // Wishart dof n = 2a = m+3
        const RieszParams p(a, WeightVector::zero(m), xi, 1, Variant::I);
        for (int rep = 0; rep < 5; ++rep) {
            const HermitianPD v = random_spd(rng, m, Algebra::real());
            CHECK(std::fabs(riesz_logpdf(v, p) - log_wishart_pdf(v, 2.0 * a, sigma0)) <
                  1e-10);
        }
    }
}

TEST_CASE("riesz_logpdf: type II equals type I with flipped weight under flip conjugation") {
    // R_II(a, kappa, I) is the flip of R_I(a, -kappa*, I): densities must agree
    RngStream rng(303);
    for (int beta : {1, 2}) {
        const int m = 3;
        const Algebra alg = Algebra::of(beta);
        const WeightVector kappa({0.8, 0.2, -0.5});
        const RieszParams p2(4.0, kappa, HermitianPD::identity(m, alg), beta, Variant::II);
        const RieszParams p1(4.0, kappa.negated_reversed(), HermitianPD::identity(m, alg),
                             beta, Variant::I);
        for (int rep = 0; rep < 10; ++rep) {
            const HermitianPD v = random_spd(rng, m, alg);
            CHECK(std::fabs(riesz_logpdf(v, p2) - riesz_logpdf(v.flip(), p1)) < 1e-10);
        }
    }
}

TEST_CASE("riesz_logpdf: non-PD point gives -inf") {
    AlgMatrix a(2, 2, Algebra::real());
    a(0, 0) = Elem(1.0);
    a(0, 1) = Elem(4.0);
    a(1, 0) = Elem(4.0);
    a(1, 1) = Elem(1.0);
    const RieszParams p(3.0, WeightVector::zero(2), HermitianPD::identity(2, Algebra::real()),
                        1, Variant::I);
    CHECK(riesz_logpdf(HermitianPD(a), p) == -std::numeric_limits<double>::infinity());
}

TEST_CASE("kotzriesz_logpdf: Gaussian reduction at kappa = 0") {
    const int n = 2, m = 2;
    const Algebra alg = Algebra::real();
    const KotzRieszParams p(WeightVector::zero(m), AlgMatrix(n, m, alg),
                            HermitianPD::identity(n, alg), HermitianPD::identity(m, alg),
                            Variant::I);
    RngStream rng(305);
    for (int rep = 0; rep < 5; ++rep) {
        const AlgMatrix y = gaussian_matrix(rng, n, m, alg, 0.8);
        double target = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j)
                target += -0.5 * std::log(pi) - y(i, j).w * y(i, j).w;
        CHECK(kotzriesz_logpdf(y, p) == doctest::Approx(target).epsilon(1e-12));
    }
    // n=m=1 at zero: 1/sqrt(pi)
    const KotzRieszParams p1(WeightVector::zero(1), AlgMatrix(1, 1, alg),
                             HermitianPD::identity(1, alg), HermitianPD::identity(1, alg),
                             Variant::I);
    CHECK(kotzriesz_logpdf(scalar_mat(0.0), p1) ==
          doctest::Approx(std::log(1.0 / std::sqrt(pi))).epsilon(1e-13));
}

TEST_CASE("kotzriesz_logpdf: value at mu is the log constant for kappa = 0") {
    RngStream rng(307);
    const int n = 3, m = 2;
    const Algebra alg = Algebra::complex();
    const AlgMatrix mu = gaussian_matrix(rng, n, m, alg, 1.0);
    const HermitianPD theta = random_spd(rng, n, alg);
    const HermitianPD sigma = random_spd(rng, m, alg);
    for (const Variant var : {Variant::I, Variant::II}) {
        const KotzRieszParams p(WeightVector::zero(m), mu, theta, sigma, var);
        const double beta = 2, a = 0.5 * n * beta;
        const double logc = lgamma_m(a, 2, m) - 0.5 * m * n * beta * std::log(pi) -
                            lgamma_m(a, 2, m) + 0.5 * m * n * beta * std::log(2.0) -
                            a * logdet(sigma) - 0.5 * m * beta * logdet(theta);
        CHECK(std::isfinite(kotzriesz_logpdf(mu, p)));
        CHECK(kotzriesz_logpdf(mu, p) == doctest::Approx(logc).epsilon(1e-12));
    }
}

TEST_CASE("kotzriesz_logpdf: 2-d quadrature normalizes (n=2, m=1, kappa=(1))") {
    const Algebra alg = Algebra::real();
    const KotzRieszParams p(WeightVector({1.0}), AlgMatrix(2, 1, alg),
                            HermitianPD::identity(2, alg), HermitianPD::identity(1, alg),
                            Variant::I);
    QuadBudget budget;
    auto inner = [&](double y1) {
        return integrate_real_line(
            [&](double y2) {
                AlgMatrix y(2, 1, alg);
                y(0, 0) = Elem(y1);
                y(1, 0) = Elem(y2);
                return std::exp(kotzriesz_logpdf(y, p));
            },
            1e-10, budget);
    };
    const double total = integrate_real_line(inner, 1e-9, budget);
    CHECK(std::fabs(total - 1.0) < 1e-8);
}

TEST_CASE("triesz_logpdf: Student-t reduction and center value") {
    const Algebra alg = Algebra::real();
    const double nu = 3.0;
    const TRieszParams p(nu, 0.0, WeightVector::zero(1), 1.0 / nu, AlgMatrix(1, 1, alg),
                         HermitianPD::identity(1, alg), HermitianPD::identity(1, alg),
                         Variant::I);
    CHECK(std::exp(triesz_logpdf(scalar_mat(0.0), p)) ==
          doctest::Approx(0.367552596).epsilon(1e-8));
    for (double x : {-2.0, -0.5, 0.0, 0.7, 3.1}) {
        CHECK(triesz_logpdf(scalar_mat(x), p) ==
              doctest::Approx(log_student_t_pdf(x, nu)).epsilon(1e-12));
    }
}

TEST_CASE("triesz_logpdf: classical trace-kernel matrix T reduction (k=0, tau=0)") {
    RngStream rng(309);
    const int n = 3, m = 2;
    for (int beta : {1, 2}) {
        const Algebra alg = Algebra::of(beta);
        const AlgMatrix mu = gaussian_matrix(rng, n, m, alg, 0.5);
        const HermitianPD theta = random_spd(rng, n, alg);
        const HermitianPD sigma = random_spd(rng, m, alg);
        const double nu = 5.0, rho = 0.7;
        const TRieszParams p(nu, 0.0, WeightVector::zero(m), rho, mu, theta, sigma,
                             Variant::I);
        for (int rep = 0; rep < 5; ++rep) {
            const AlgMatrix t = gaussian_matrix(rng, n, m, alg, 1.0);
            const WhitenedGram g = whitened_gram(t, mu, theta, sigma);
            const double e = 0.5 * (nu + m * n) * beta;
            const double target = std::lgamma(e) - std::lgamma(0.5 * nu * beta) +
                                  0.5 * m * n * beta * std::log(rho / pi) -
                                  0.5 * n * beta * logdet(sigma) -
                                  0.5 * m * beta * logdet(theta) -
                                  e * std::log1p(rho * g.trace);
            CHECK(std::fabs(triesz_logpdf(t, p) - target) < 1e-10);
        }
    }
}

TEST_CASE("triesz_logpdf: scale equivariance in rho") {
    RngStream rng(311);
    const int n = 2, m = 2;
    const Algebra alg = Algebra::real();
    const double nu = 4.0, k = 0.5, rho = 0.8, c = 1.7;
    const WeightVector tau({2.0, 1.0});
    const TRieszParams p_rho(nu, k, tau, rho, AlgMatrix(n, m, alg),
                             HermitianPD::identity(n, alg), HermitianPD::identity(m, alg),
                             Variant::I);
    const TRieszParams p_scaled(nu, k, tau, rho / (c * c), AlgMatrix(n, m, alg),
                                HermitianPD::identity(n, alg), HermitianPD::identity(m, alg),
                                Variant::I);
    for (int rep = 0; rep < 10; ++rep) {
        const AlgMatrix t = gaussian_matrix(rng, n, m, alg, 1.0);
        const double lhs = triesz_logpdf(t, p_rho);
        const double rhs = triesz_logpdf(t * c, p_scaled) + m * n * std::log(c);
        CHECK(std::fabs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("beta_riesz_logpdf: scalar beta-prime reduction") {
    const Algebra alg = Algebra::real();
    const double nu = 3.0;
    const BetaRieszParams p(1, nu, 0.0, WeightVector::zero(1), 1.0,
                            HermitianPD::identity(1, alg), Variant::I);
    // f(x) = c x^{-1/2} (1+x)^{-(nu+1)/2}, c = Gamma((nu+1)/2) / (sqrt(pi) Gamma(nu/2))
    const double logc = std::lgamma(0.5 * (nu + 1.0)) - 0.5 * std::log(pi) -
                        std::lgamma(0.5 * nu);
    for (double x : {0.2, 1.0, 5.0}) {
        const double target = logc - 0.5 * std::log(x) - 0.5 * (nu + 1.0) * std::log1p(x);
        CHECK(beta_riesz_logpdf(scalar_pd(x), p) == doctest::Approx(target).epsilon(1e-12));
    }
}

TEST_CASE("beta_riesz_logpdf: m=2 classical beta-II-type reduction (tau=0, k=0)") {
    RngStream rng(313);
    const int n = 3, m = 2;
    const double nu = 4.0, rho = 0.9;
    const HermitianPD sigma = random_spd(rng, m, Algebra::real());
    const BetaRieszParams p(n, nu, 0.0, WeightVector::zero(m), rho, sigma, Variant::I);
    for (int rep = 0; rep < 5; ++rep) {
        const HermitianPD f = random_spd(rng, m, Algebra::real());
        const UpperTriangular us = cholesky_upper(sigma);
        const double tr =
            solve_upper_left(us, solve_upper_adjoint_left(us, f.mat())).trace_real();
        double lgm = 0.25 * m * (m - 1) * std::log(pi);
        for (int i = 1; i <= m; ++i) lgm += std::lgamma(0.5 * n - 0.5 * (i - 1));
        const double e = 0.5 * (m * n + nu);
        const double target = std::lgamma(e) + 0.5 * m * n * std::log(rho) - lgm -
                              std::lgamma(0.5 * nu) - 0.5 * n * logdet(sigma) +
                              0.5 * (n - m + 1 - 2) * logdet(f) - e * std::log1p(rho * tr);
        CHECK(std::fabs(beta_riesz_logpdf(f, p) - target) < 1e-9);
    }
}

TEST_CASE("sv_triesz_logpdf: folded Student-t at m = 1") {
    const double nu = 3.0;
    const SvParams p(1, 1, 1, Variant::I, nu, 0.0, 1.0 / nu, Partition());
    for (double a : {0.1, 0.9, 2.5}) {
        const double target = std::log(2.0) + log_student_t_pdf(a, nu);
        CHECK(std::fabs(sv_triesz_logpdf({a}, p) - target) < 1e-10);
    }
}

TEST_CASE("sv/eig densities: ordering, ties, chain rule") {
    const SvParams p(3, 2, 1, Variant::I, 5.0, 0.0, 1.0, Partition({1}));
    CHECK(sv_triesz_logpdf({2.0, 2.0}, p) == -std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(sv_triesz_logpdf({1.0, 2.0}, p), UnorderedInput);
    CHECK_THROWS_AS(eig_beta_riesz_logpdf({1.0, 2.0}, p), UnorderedInput);

    // gamma-density equals alpha-density times prod 1/(2 sqrt(gamma))
    for (const auto& g : {std::pair{3.0, 1.2}, std::pair{5.5, 0.3}}) {
        const std::vector<double> gam{g.first, g.second};
        const std::vector<double> alf{std::sqrt(g.first), std::sqrt(g.second)};
        const double target = sv_triesz_logpdf(alf, p) -
                              std::log(2.0 * alf[0]) - std::log(2.0 * alf[1]);
        CHECK(eig_beta_riesz_logpdf(gam, p) == doctest::Approx(target).epsilon(1e-12));
    }
}

TEST_CASE("parameter validation cites the existence condition") {
    const Algebra alg = Algebra::real();
    // type II scalar T-Riesz with nu*beta/2 - k <= 0
    CHECK_THROWS_WITH_AS(
        TRieszParams(2.0, 1.0, WeightVector::zero(1), 1.0, AlgMatrix(1, 1, alg),
                     HermitianPD::identity(1, alg), HermitianPD::identity(1, alg),
                     Variant::II),
        doctest::Contains("type II requires nu*beta/2 - k > 0"), DomainError);
    // Riesz type I shape bound
    CHECK_THROWS_WITH_AS(RieszParams(0.2, WeightVector({-0.5, -0.5}),
                                     HermitianPD::identity(2, alg), 1, Variant::I),
                         doctest::Contains("type I requires a > (m-1)beta/2 - k_m"),
                         DomainError);
    // rho must be positive
    CHECK_THROWS_WITH_AS(
        TRieszParams(3.0, 0.0, WeightVector::zero(1), -1.0, AlgMatrix(1, 1, alg),
                     HermitianPD::identity(1, alg), HermitianPD::identity(1, alg),
                     Variant::I),
        doctest::Contains("rho must be positive"), DomainError);
}
