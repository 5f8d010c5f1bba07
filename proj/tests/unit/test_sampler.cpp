#include "doctest.h"

#include <cmath>

#include "rieszlab/sampler.hpp"
#include "rieszlab/specfun.hpp"
#include "rieszlab/stats.hpp"
#include "test_helpers.hpp"

using namespace rieszlab;
using rieszlab::testing::random_spd;

TEST_CASE("sample_riesz_scalar: gamma moments and existence boundary") {
    RngStream rng(401);
    {
        // nu=4, k=0, rho=1, beta=1 -> Gamma(2,1), mean 2
        std::vector<double> xs(200000);
        for (double& v : xs) v = sample_riesz_scalar(rng, 4.0, 0.0, 1.0, 1, Variant::I);
        const Summary s = summarize(xs);
        CHECK(std::fabs(s.mean - 2.0) < 3.0 * s.std_error);
    }
    {
        // nu=2, k=1, rho=2, variant I -> Gamma(2, 1/2), mean 4
        std::vector<double> xs(200000);
        for (double& v : xs) v = sample_riesz_scalar(rng, 2.0, 1.0, 2.0, 1, Variant::I);
        const Summary s = summarize(xs);
        CHECK(std::fabs(s.mean - 4.0) < 3.0 * s.std_error);
    }
    CHECK_THROWS_AS(sample_riesz_scalar(rng, 2.0, 1.0, 1.0, 1, Variant::II), DomainError);
}

TEST_CASE("sample_riesz_scalar: KS against the gamma law, fractional shape") {
    RngStream rng(403);
    const double nu = 1.3, k = -0.2, rho = 0.7;
    std::vector<double> xs(50000);
    for (double& v : xs) v = sample_riesz_scalar(rng, nu, k, rho, 2, Variant::I);
    const double shape = 0.5 * nu * 2 + k;   // 1.1
    const KsResult ks =
        ks_test(xs, [&](double x) { return gamma_cdf(x, shape, 2.0 / rho); });
    CHECK(ks.p_value > 0.001);
}

TEST_CASE("sample_riesz_matrix: m=1 reduces to the scalar law") {
    RngStream rng(405);
    const double a = 2.4, k = 0.6, xi = 1.8;
    AlgMatrix xim(1, 1, Algebra::real());
    xim(0, 0) = Elem(xi);
    std::vector<double> xs(30000);
    for (double& v : xs)
        v = sample_riesz_matrix(rng, a, WeightVector({k}), HermitianPD(xim), 1, Variant::I)(0, 0).w;
    const KsResult ks = ks_test(xs, [&](double x) { return gamma_cdf(x, a + k, 1.0 / xi); });
    CHECK(ks.p_value > 0.001);
}

TEST_CASE("sample_riesz_matrix: Wishart mean at kappa=0, Xi=2I") {
    RngStream rng(407);
    const int m = 2;
    const double a = 3.0;
    const HermitianPD xi(AlgMatrix::identity(m, Algebra::real()) * 2.0);
    std::vector<double> d0, d1, off;
    for (int i = 0; i < 30000; ++i) {
        const HermitianPD w =
            sample_riesz_matrix(rng, a, WeightVector::zero(m), xi, 1, Variant::I);
        d0.push_back(w(0, 0).w);
        d1.push_back(w(1, 1).w);
        off.push_back(w(0, 1).w);
    }
    const Summary s0 = summarize(d0), s1 = summarize(d1), so = summarize(off);
    CHECK(std::fabs(s0.mean - 2.0 * a) < 3.0 * s0.std_error);
    CHECK(std::fabs(s1.mean - 2.0 * a) < 3.0 * s1.std_error);
    CHECK(std::fabs(so.mean) < 3.0 * so.std_error);
}

TEST_CASE("sample_riesz_matrix: E[log q_kappa] matches the gamma-integral derivative") {
    // differentiate log Gamma_m[a, kappa] numerically in k_1
    RngStream rng(409);
    const int m = 2, beta = 1;
    const double a = 3.0;
    const WeightVector kappa({1.0, 0.0});
    const HermitianPD eye = HermitianPD::identity(m, Algebra::real());

    std::vector<double> logq(60000);
    for (double& v : logq)
        v = log_q_kappa(sample_riesz_matrix(rng, a, kappa, eye, beta, Variant::I), kappa);

    const double h = 1e-5;
    auto lgw = [&](double k1) {
        return lgamma_m_weighted(a, WeightVector({k1, 0.0}), beta, m, WeightSign::plus);
    };
    // kappa = (1,0): d/dk1 log Gamma_m[a,kappa] = E[log lambda_1] = E[log q_kappa]
    const double target = (lgw(1.0 + h) - lgw(1.0 - h)) / (2.0 * h);
    const Summary s = summarize(logq);
    CHECK(std::fabs(s.mean - target) < 3.0 * s.std_error);
}

TEST_CASE("sample_riesz_matrix: type II diagonal marginals") {
    RngStream rng(411);
    const int m = 2;
    const double a = 3.2;
    const WeightVector kappa({0.7, 0.3});
    for (int beta : {1, 2}) {
        const Algebra alg = Algebra::of(beta);
        std::vector<double> v11, vmm;
        for (int i = 0; i < 30000; ++i) {
            const HermitianPD v = sample_riesz_matrix(
                rng, a, kappa, HermitianPD::identity(m, alg), beta, Variant::II);
            v11.push_back(v(0, 0).w);
            vmm.push_back(v(m - 1, m - 1).w);
        }
        // V_11 ~ Gamma(a - k_1, beta), V_mm ~ Gamma(a - k_m, beta)
        CHECK(ks_test(v11, [&](double x) { return gamma_cdf(x, a - kappa[0], beta); })
                  .p_value > 0.001);
        CHECK(ks_test(vmm, [&](double x) { return gamma_cdf(x, a - kappa[m - 1], beta); })
                  .p_value > 0.001);
    }
}

TEST_CASE("sample_riesz_matrix: scalar type II with scale") {
    RngStream rng(413);
    const double a = 2.5, k = 0.4, xi = 2.2;
    AlgMatrix xim(1, 1, Algebra::real());
    xim(0, 0) = Elem(xi);
    std::vector<double> xs(30000);
    for (double& v : xs)
        v = sample_riesz_matrix(rng, a, WeightVector({k}), HermitianPD(xim), 1,
                                Variant::II)(0, 0).w;
    const KsResult ks = ks_test(xs, [&](double x) { return gamma_cdf(x, a - k, 1.0 / xi); });
    CHECK(ks.p_value > 0.001);
}

TEST_CASE("sample_kotzriesz: kappa=0 coordinate is Gaussian with matrix-normal variance") {
    RngStream rng(415);
    const int n = 2, m = 2;
    for (int beta : {1, 2}) {
        const Algebra alg = Algebra::of(beta);
        RngStream loc(416, beta);
        AlgMatrix mu = gaussian_matrix(loc, n, m, alg, 1.0);
        const HermitianPD theta = random_spd(loc, n, alg);
        const HermitianPD sigma = random_spd(loc, m, alg);
        const KotzRieszParams p(WeightVector::zero(m), mu, theta, sigma, Variant::I);
        std::vector<double> y11(20000);
        for (double& v : y11) v = sample_kotzriesz(rng, p)(0, 0).w;
        const double sd = std::sqrt(theta(0, 0).w * sigma(0, 0).w / (2.0 * beta));
        const KsResult ks =
            ks_test(y11, [&](double x) { return normal_cdf(x, mu(0, 0).w, sd); });
        CHECK(ks.p_value > 0.001);
    }
}

TEST_CASE("sample_kotzriesz: gram eigenvalues match the Riesz factor (two-sample KS)") {
    RngStream rng(417);
    const int n = 3, m = 2, beta = 1;
    const Algebra alg = Algebra::of(beta);
    const WeightVector kappa({1.0, 0.0});
    const KotzRieszParams p(kappa, AlgMatrix(n, m, alg), HermitianPD::identity(n, alg),
                            HermitianPD::identity(m, alg), Variant::I);
    std::vector<double> eig_y_max, eig_w_max, eig_y_min, eig_w_min;
    for (int i = 0; i < 8000; ++i) {
        const AlgMatrix y = sample_kotzriesz(rng, p);
        const auto ey = eigenvalues_sym(HermitianPD::gram(y));
        eig_y_max.push_back(ey[0]);
        eig_y_min.push_back(ey[1]);
        const HermitianPD w = sample_riesz_matrix(rng, 0.5 * n * beta, kappa,
                                                  HermitianPD::identity(m, alg), beta,
                                                  Variant::I);
        const auto ew = eigenvalues_sym(w);
        eig_w_max.push_back(ew[0]);
        eig_w_min.push_back(ew[1]);
    }
    CHECK(ks_test_two_sample(eig_y_max, eig_w_max).p_value > 0.001);
    CHECK(ks_test_two_sample(eig_y_min, eig_w_min).p_value > 0.001);
}

TEST_CASE("sample_triesz: Student-t reduction, median at mu, mixing independence") {
    RngStream rng(419);
    const Algebra alg = Algebra::real();
    const double nu = 3.0;
    const TRieszParams p(nu, 0.0, WeightVector::zero(1), 1.0 / nu, AlgMatrix(1, 1, alg),
                         HermitianPD::identity(1, alg), HermitianPD::identity(1, alg),
                         Variant::I);
    std::vector<double> ts, ss, ynorm;
    for (int i = 0; i < 50000; ++i) {
        const auto [t, s] = sample_triesz_with_mixing(rng, p);
        ts.push_back(t(0, 0).w);
        ss.push_back(s);
        ynorm.push_back(s * t(0, 0).w * t(0, 0).w);   // ||Y||^2 = S ||T - mu||^2
    }
    CHECK(ks_test(ts, [&](double x) { return student_t_cdf(x, nu); }).p_value > 0.001);

    std::sort(ts.begin(), ts.end());
    const double median = ts[ts.size() / 2];
    CHECK(std::fabs(median) < 0.03);   // t_3 median CI at N = 5e4

    const double corr = correlation(ss, ynorm);
    CHECK(std::fabs(corr) * std::sqrt(static_cast<double>(ss.size())) < 3.5);
}

TEST_CASE("sample_beta_riesz: scalar reduction F = t^2 and PD outputs") {
    RngStream rng(421);
    const double nu = 3.0;
    const BetaRieszParams p(1, nu, 0.0, WeightVector::zero(1), 1.0 / nu,
                            HermitianPD::identity(1, Algebra::real()), Variant::I);
    std::vector<double> fs(40000);
    for (double& v : fs) v = sample_beta_riesz(rng, p)(0, 0).w;
    const KsResult ks = ks_test(fs, [&](double x) {
        return x <= 0 ? 0.0 : 2.0 * student_t_cdf(std::sqrt(x), nu) - 1.0;
    });
    CHECK(ks.p_value > 0.001);

    const BetaRieszParams pm(3, 4.0, 0.3, WeightVector({1.0, 0.0}), 1.0,
                             HermitianPD::identity(2, Algebra::real()), Variant::I);
    for (int i = 0; i < 200; ++i) CHECK_NOTHROW(cholesky_upper(sample_beta_riesz(rng, pm)));
}

TEST_CASE("reproducibility: identical (seed, stream) replays identical draws") {
    const TRieszParams p(4.0, 0.2, WeightVector({1.0, 0.0}), 0.5,
                         AlgMatrix(3, 2, Algebra::complex()),
                         HermitianPD::identity(3, Algebra::complex()),
                         HermitianPD::identity(2, Algebra::complex()), Variant::I);
    RngStream r1(99, 5), r2(99, 5), r3(99, 6);
    bool identical = true, distinct = false;
    for (int rep = 0; rep < 20; ++rep) {
        const AlgMatrix a = sample_triesz(r1, p);
        const AlgMatrix b = sample_triesz(r2, p);
        const AlgMatrix c = sample_triesz(r3, p);
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j) {
                if (a(i, j).w != b(i, j).w || a(i, j).x != b(i, j).x) identical = false;
                if (a(i, j).w != c(i, j).w) distinct = true;
            }
    }
    CHECK(identical);
    CHECK(distinct);
}
