#pragma once

#include <functional>
#include <vector>

#include "rieszlab/errors.hpp"

namespace rieszlab {

using Integrand = std::function<double(double)>;

/// Shared node budget across nested integrations of one check.
struct QuadBudget {
    long remaining = 10'000'000;
    void charge(long n) {
        remaining -= n;
        if (remaining < 0)
            throw IntegrationFailure("quadrature: node budget exhausted");
    }
};

/// Adaptive Gauss-Kronrod (G7, K15) on a finite interval, refining the
/// worst segment until the accumulated error estimate is below
/// rel_tol * |integral| (plus a tiny absolute floor).
double integrate_adaptive(const Integrand& f, double a, double b, double rel_tol,
                          QuadBudget& budget);

/// Integral over (0, inf) via x = s / (1 - s).
double integrate_half_line(const Integrand& f, double rel_tol, QuadBudget& budget);

/// Integral over the whole real line via x = s / (1 - s^2).
double integrate_real_line(const Integrand& f, double rel_tol, QuadBudget& budget);

/// Coordinate domains for tensor quadrature.
enum class Coord { positive, real_line };

/// Tensor Gauss-Legendre over the mapped unit cube, refining the per-axis
/// node count until two successive refinements agree to rel_tol. Suited
/// to smooth integrands whose tails the coordinate maps compress.
double integrate_tensor(const std::vector<Coord>& dims,
                        const std::function<double(const std::vector<double>&)>& f,
                        double rel_tol, QuadBudget& budget);

/// Gauss-Legendre nodes and weights on (-1, 1).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace rieszlab
