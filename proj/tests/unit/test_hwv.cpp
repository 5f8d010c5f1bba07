#include "doctest.h"

#include <cmath>

#include "rieszlab/hwv.hpp"
#include "test_helpers.hpp"

using namespace rieszlab;
using rieszlab::testing::random_spd;
using rieszlab::testing::random_upper;
using rieszlab::testing::random_weight;

namespace {

HermitianPD diag2(double a, double b) {
    AlgMatrix d(2, 2, Algebra::real());
    d(0, 0) = Elem(a);
    d(1, 1) = Elem(b);
    return HermitianPD(d);
}

// principal-minor form of q_kappa, the independent route
double log_q_by_minors(const HermitianPD& a, const WeightVector& k) {
    const int m = a.dim();
    double s = 0;
    double prev = 0;   // log det of the leading i-minor
    for (int i = 1; i <= m; ++i) {
        AlgMatrix lead(i, i, a.algebra());
        for (int r = 0; r < i; ++r)
            for (int c = 0; c < i; ++c) lead(r, c) = a(r, c);
        const double ld = logdet(HermitianPD(lead));
        const double expo = (i == m) ? k[m - 1] : k[i - 1] - k[i];
        s += expo * ld;
        prev = ld;
        (void)prev;
    }
    return s;
}

} // namespace

TEST_CASE("log_q_kappa: identity, diagonal, minor form") {
    const WeightVector k21({2.0, 1.0});
    CHECK(log_q_kappa(HermitianPD::identity(3, Algebra::real()),
                      WeightVector({2.5, 1.0, -0.5})) == doctest::Approx(0.0).epsilon(1e-14));

    // diag(2,3), kappa=(2,1): q = 2^2 * 3 = 12; minor route 2^1 * 6^1 = 12
    const HermitianPD d = diag2(2.0, 3.0);
    CHECK(log_q_kappa(d, k21) == doctest::Approx(std::log(12.0)).epsilon(1e-13));
    CHECK(log_q_by_minors(d, k21) == doctest::Approx(std::log(12.0)).epsilon(1e-13));

    RngStream rng(101);
    for (int beta : {1, 2}) {
        for (int m : {2, 3, 5}) {
            const HermitianPD a = random_spd(rng, m, Algebra::of(beta));
            const WeightVector k = random_weight(rng, m);
            CHECK(std::fabs(log_q_kappa(a, k) - log_q_by_minors(a, k)) < 1e-11);
        }
    }
}

TEST_CASE("log_q_kappa: constant weight gives p log|A| (qk3)") {
    RngStream rng(103);
    const HermitianPD a = random_spd(rng, 4, Algebra::complex());
    const double p = 1.7;
    CHECK(std::fabs(log_q_kappa(a, WeightVector::constant(4, p)) - p * logdet(a)) < 1e-11);
}

TEST_CASE("log_q_star_kappa: diagonal reversal and constant weight") {
    const WeightVector k21({2.0, 1.0});
    // diag(2,3): q* = 2^{k_2} 3^{k_1} = 2 * 9 = 18
    CHECK(log_q_star_kappa(diag2(2.0, 3.0), k21) ==
          doctest::Approx(std::log(18.0)).epsilon(1e-13));
    CHECK(log_q_star_kappa(HermitianPD::identity(2, Algebra::real()), k21) ==
          doctest::Approx(0.0).epsilon(1e-14));

    RngStream rng(105);
    const HermitianPD a = random_spd(rng, 3, Algebra::real());
    const double p = -0.8;
    CHECK(std::fabs(log_q_star_kappa(a, WeightVector::constant(3, p)) - p * logdet(a)) <
          1e-11);
}

TEST_CASE("log_q_kappa_inv: explicit-inverse oracle") {
    // diagonal case first: q_kappa(diag(2,3)^{-1}) = (1/2)^2 (1/3)^1 = 1/12
    const WeightVector k21({2.0, 1.0});
    CHECK(log_q_kappa_inv(diag2(2.0, 3.0), k21) ==
          doctest::Approx(-std::log(12.0)).epsilon(1e-13));

    RngStream rng(107);
    for (int beta : {1, 2}) {
        for (int m : {1, 2, 3, 4}) {
            const HermitianPD a = random_spd(rng, m, Algebra::of(beta));
            const WeightVector k = random_weight(rng, m);
            const double via_inverse = log_q_kappa(inverse(a), k);
            CHECK(std::fabs(log_q_kappa_inv(a, k) - via_inverse) < 1e-10);
        }
    }
}

TEST_CASE("q_kappa identity suite: qk2, qk41, qk42, qk5, qk6") {
    RngStream rng(109);
    for (int rep = 0; rep < 60; ++rep) {
        const int beta = (rep % 2) ? 2 : 1;
        const int m = 1 + static_cast<int>(rng.uniform01() * 5);
        const Algebra alg = Algebra::of(beta);
        const HermitianPD a = random_spd(rng, m, alg);
        const WeightVector k = random_weight(rng, m);

        // qk2 through the dual weight
        CHECK(std::fabs(log_q_kappa_inv(a, k) - log_q_star_kappa(a, k.negated_reversed())) <
              1e-12);

        // qk41 additivity with a partition-shaped tau
        std::vector<double> tparts(m);
        for (int i = 0; i < m; ++i) tparts[i] = static_cast<double>(m - i);
        const WeightVector tau(tparts);
        CHECK(std::fabs(log_q_kappa(a, k + tau) - log_q_kappa(a, k) - log_q_kappa(a, tau)) <
              1e-11);

        // qk42 shift
        const double p = 1.3;
        CHECK(std::fabs(log_q_kappa(a, k.shifted(p)) - p * logdet(a) - log_q_kappa(a, k)) <
              1e-11);

        // qk5 / qk6 triangular congruences
        const UpperTriangular b = random_upper(rng, m, alg);
        const HermitianPD c = HermitianPD::gram(b.mat());
        const HermitianPD bab(b.mat().adjoint() * a.mat() * b.mat(), 1e-9);
        CHECK(std::fabs(log_q_kappa(bab, k) - log_q_kappa(c, k) - log_q_kappa(a, k)) < 1e-10);

        const AlgMatrix binv = solve_upper_left(b, AlgMatrix::identity(m, alg));
        const HermitianPD conj_inv(binv.adjoint() * a.mat() * binv, 1e-9);
        CHECK(std::fabs(log_q_kappa(conj_inv, k) + log_q_kappa(c, k) - log_q_kappa(a, k)) <
              1e-10);
    }
}
