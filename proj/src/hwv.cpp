#include "rieszlab/hwv.hpp"

#include <cmath>

namespace rieszlab {

namespace {

void check_size(const HermitianPD& a, const WeightVector& kappa, const char* op) {
    if (kappa.size() != a.dim())
        throw ShapeMismatch(std::string(op) + ": weight length must equal matrix dimension");
}

} // namespace

double log_q_kappa(const HermitianPD& a, const WeightVector& kappa) {
    check_size(a, kappa, "log_q_kappa");
    const std::vector<double> lam = ldl_pivots(a);
    double s = 0;
    for (int i = 0; i < kappa.size(); ++i) s += kappa[i] * std::log(lam[i]);
    return s;
}

double log_q_star_kappa(const HermitianPD& a, const WeightVector& kappa) {
    check_size(a, kappa, "log_q_star_kappa");
    const std::vector<double> mu = ldl_pivots_trailing(a);
    double s = 0;
    for (int i = 0; i < kappa.size(); ++i) s += kappa[i] * std::log(mu[i]);
    return s;
}

double log_q_kappa_inv(const HermitianPD& a, const WeightVector& kappa) {
    check_size(a, kappa, "log_q_kappa_inv");
    return log_q_star_kappa(a, kappa.negated_reversed());
}

std::optional<double> try_log_q_kappa(const HermitianPD& a, const WeightVector& kappa) {
    check_size(a, kappa, "try_log_q_kappa");
    std::vector<double> lam;
    const int good = ldl_pivots_partial(a, lam);
    double s = 0;
    for (int i = 0; i < kappa.size(); ++i) {
        if (kappa[i] == 0.0) continue;
        if (i >= good) return std::nullopt;
        s += kappa[i] * std::log(lam[i]);
    }
    return s;
}

std::optional<double> try_log_q_kappa_inv(const HermitianPD& a, const WeightVector& kappa) {
    check_size(a, kappa, "try_log_q_kappa_inv");
    // q_kappa(A^{-1}) = prod_j mu_j^{-k_{m-j+1}}, mu = leading pivots of JAJ
    const int m = kappa.size();
    std::vector<double> mu;
    const int good = ldl_pivots_partial(a.flip(), mu);
    double s = 0;
    for (int j = 0; j < m; ++j) {
        const double w = -kappa[m - 1 - j];
        if (w == 0.0) continue;
        if (j >= good) return std::nullopt;
        s += w * std::log(mu[j]);
    }
    return s;
}

} // namespace rieszlab
