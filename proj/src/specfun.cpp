#include "rieszlab/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace rieszlab {

namespace {

void check_beta(int beta) {
    if (beta != 1 && beta != 2 && beta != 4 && beta != 8)
        throw DomainError("beta must be one of 1, 2, 4, 8");
}

double lgamma_checked(double arg, const std::string& context) {
    if (!(arg > 0.0))
        throw DomainError(context + ": gamma argument " + std::to_string(arg) +
                          " not positive");
    return std::lgamma(arg);
}

} // namespace

double lgamma_m(double a, int beta, int m) {
    check_beta(beta);
    if (m < 1) throw DomainError("lgamma_m: m must be >= 1");
    double s = 0.25 * m * (m - 1) * beta * std::log(std::numbers::pi);
    for (int i = 1; i <= m; ++i)
        s += lgamma_checked(a - 0.5 * (i - 1) * beta,
                            "lgamma_m requires a > (m-1)beta/2; factor i=" +
                                std::to_string(i));
    return s;
}

double lgamma_m_weighted(double a, const WeightVector& kappa, int beta, int m,
                         WeightSign sign) {
    check_beta(beta);
    if (kappa.size() != m) throw DomainError("lgamma_m_weighted: weight length != m");
    double s = 0.25 * m * (m - 1) * beta * std::log(std::numbers::pi);
    for (int i = 1; i <= m; ++i) {
        const double arg = (sign == WeightSign::plus)
                               ? a + kappa[i - 1] - 0.5 * (i - 1) * beta
                               : a - kappa[i - 1] - 0.5 * (m - i) * beta;
        s += lgamma_checked(arg, std::string("lgamma_m_weighted(") +
                                     (sign == WeightSign::plus ? "+" : "-") +
                                     "): admissibility fails at index i=" +
                                     std::to_string(i));
    }
    return s;
}

double log_gen_pochhammer(double a, const WeightVector& kappa, int beta) {
    check_beta(beta);
    const int m = kappa.size();
    // Ratio form: the pi powers of the weighted and plain gammas cancel.
    double s = 0;
    for (int i = 1; i <= m; ++i) {
        const double base = a - 0.5 * (i - 1) * beta;
        s += lgamma_checked(base + kappa[i - 1],
                            "log_gen_pochhammer: a + k_i - (i-1)beta/2 must be positive "
                            "(index " + std::to_string(i) + ")") -
             lgamma_checked(base, "log_gen_pochhammer: a - (i-1)beta/2 must be positive "
                                  "(index " + std::to_string(i) + ")");
    }
    return s;
}

double log_stiefel_volume(int n, int m, int beta) {
    check_beta(beta);
    if (n < m || m < 1) throw DomainError("log_stiefel_volume: requires n >= m >= 1");
    return m * std::log(2.0) + 0.5 * m * n * beta * std::log(std::numbers::pi) -
           lgamma_m(0.5 * n * beta, beta, m);
}

} // namespace rieszlab
