#pragma once

#include <functional>
#include <vector>

namespace rieszlab {

/// Regularized lower incomplete gamma P(a, x) (series / continued
/// fraction split at x = a + 1).
double reg_incomplete_gamma(double a, double x);

/// Gamma(shape, rate) CDF.
double gamma_cdf(double x, double shape, double rate);

/// Regularized incomplete beta I_x(a, b).
double reg_incomplete_beta(double a, double b, double x);

/// Student-t CDF with nu degrees of freedom.
double student_t_cdf(double x, double nu);

double normal_cdf(double x, double mean = 0.0, double sd = 1.0);

/// Asymptotic Kolmogorov tail Q(lambda) = 2 sum (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

/// One-sample Kolmogorov-Smirnov test against a CDF; samples need not be
/// sorted. Returns the p-value (Stephens small-sample correction).
struct KsResult {
    double statistic = 0;
    double p_value = 0;
};
KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov-Smirnov test.
KsResult ks_test_two_sample(std::vector<double> a, std::vector<double> b);

struct Summary {
    double mean = 0;
    double std_error = 0;
    long n = 0;
};
Summary summarize(const std::vector<double>& xs);

/// Pearson correlation.
double correlation(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace rieszlab
