#include "rieszlab/sampler.hpp"

#include <cmath>
#include <string>

#include "rieszlab/linalg.hpp"

namespace rieszlab {

double sample_riesz_scalar(RngStream& rng, double nu, double k, double rho, int beta,
                           Variant variant) {
    Algebra::of(beta);
    if (!(rho > 0)) throw DomainError("sample_riesz_scalar: rho must be positive");
    const double shape = 0.5 * nu * beta + (variant == Variant::I ? k : -k);
    if (!(shape > 0))
        throw DomainError(std::string("sample_riesz_scalar: type ") + variant_name(variant) +
                          " requires nu*beta/2 " + (variant == Variant::I ? "+" : "-") +
                          " k > 0 (got " + std::to_string(shape) + ")");
    return rng.gamma(shape, beta / rho);
}

namespace {

// Upper triangular Bartlett factor: t_ii = sqrt(gamma(shape_i, beta)),
// off-diagonal coordinates i.i.d. normal(0, 1/(2 beta)).
UpperTriangular bartlett_upper(RngStream& rng, const std::vector<double>& shapes,
                               Algebra alg) {
    const int m = static_cast<int>(shapes.size());
    const int beta = alg.beta;
    UpperTriangular t(m, alg);
    const double off_std = 1.0 / std::sqrt(2.0 * beta);
    for (int i = 0; i < m; ++i) {
        t(i, i) = Elem(std::sqrt(rng.gamma(shapes[i], beta)));
        for (int j = i + 1; j < m; ++j)
            for (int c = 0; c < beta; ++c) t(i, j).set_coord(c, rng.normal(0.0, off_std));
    }
    return t;
}

bool is_identity(const HermitianPD& a) {
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            const Elem d = a(i, j) - (i == j ? Elem(1.0) : Elem());
            if (d.abs() != 0.0) return false;
        }
    return true;
}

} // namespace

HermitianPD sample_riesz_matrix(RngStream& rng, double a, const WeightVector& kappa,
                                const HermitianPD& xi, int beta, Variant variant) {
    Algebra alg = Algebra::of(beta);
    alg.require_full_matrix("sample_riesz_matrix");
    const int m = xi.dim();
    RieszParams check(a, kappa, xi, beta, variant);   // existence conditions
    (void)check;

    std::vector<double> shapes(m);
    if (variant == Variant::I) {
        for (int i = 0; i < m; ++i) shapes[i] = a + kappa[i] - 0.5 * i * beta;
    } else {
        // flip-conjugated type I with weight -kappa*
        for (int i = 0; i < m; ++i) shapes[i] = a - kappa[m - 1 - i] - 0.5 * i * beta;
    }
    for (int i = 0; i < m; ++i)
        if (!(shapes[i] > 0))
            throw DomainError("sample_riesz_matrix: gamma shape at position " +
                              std::to_string(i + 1) + " is " + std::to_string(shapes[i]) +
                              "; existence condition violated");

    const UpperTriangular t = bartlett_upper(rng, shapes, alg);
    AlgMatrix w = t.mat().adjoint() * t.mat();

    if (variant == Variant::II) w = w.flip();

    if (!is_identity(xi)) {
        if (variant == Variant::I) {
            const UpperTriangular u = cholesky_upper(xi);
            w = u.mat().adjoint() * w * u.mat();
        } else {
            // lower factor l with Xi = l* l, obtained by flipping the
            // Cholesky factor of the flipped scale
            const AlgMatrix l = cholesky_upper(xi.flip()).mat().flip();
            w = l.adjoint() * w * l;
        }
    }
    return HermitianPD(w, 1e-9);
}

AlgMatrix sample_kotzriesz(RngStream& rng, const KotzRieszParams& p) {
    Algebra alg = Algebra::of(p.beta);
    alg.require_full_matrix("sample_kotzriesz");
    const int n = p.rows(), m = p.cols();
    if (n < m) throw DomainError("sample_kotzriesz: requires n >= m");

    const HermitianPD s = sample_riesz_matrix(rng, 0.5 * n * p.beta, p.kappa,
                                              HermitianPD::identity(m, alg), p.beta,
                                              p.variant);
    const UpperTriangular ts = cholesky_upper(s);
    const AlgMatrix h1 = haar_stiefel(rng, n, m, alg);
    AlgMatrix x = h1 * ts.mat();

    const UpperTriangular ut = cholesky_upper(p.theta);
    const UpperTriangular us = cholesky_upper(p.sigma);
    return ut.mat().adjoint() * x * us.mat() + p.mu;
}

std::pair<AlgMatrix, double> sample_triesz_with_mixing(RngStream& rng,
                                                       const TRieszParams& p) {
    const double s = sample_riesz_scalar(rng, p.nu, p.k, p.rho, p.beta, p.variant);
    const KotzRieszParams kr(p.tau, AlgMatrix(p.rows(), p.cols(), Algebra::of(p.beta)),
                             p.theta, p.sigma, p.variant);
    const AlgMatrix y = sample_kotzriesz(rng, kr);
    const AlgMatrix t = y * (1.0 / std::sqrt(s)) + p.mu;
    return {t, s};
}

AlgMatrix sample_triesz(RngStream& rng, const TRieszParams& p) {
    return sample_triesz_with_mixing(rng, p).first;
}

HermitianPD sample_beta_riesz(RngStream& rng, const BetaRieszParams& p) {
    Algebra alg = Algebra::of(p.beta);
    const int m = p.dim();
    const TRieszParams tp(p.nu, p.k, p.tau, p.rho, AlgMatrix(p.n, m, alg),
                          HermitianPD::identity(p.n, alg), p.sigma, p.variant);
    const AlgMatrix t = sample_triesz(rng, tp);
    return HermitianPD::gram(t);
}

} // namespace rieszlab
