#pragma once

#include <functional>
#include <vector>

#include "dosym/error.hpp"

namespace dosym {

// Defaults: quadrature 1e-8 absolute, roots 1e-10.
inline constexpr double kQuadTol = 1e-8;
inline constexpr double kRootTol = 1e-10;

struct QuadratureRule {
    std::vector<double> nodes;   // sorted, strictly inside (a, b)
    std::vector<double> weights; // sum to b - a
    double a = 0.0;
    double b = 0.0;
};

/// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree <= 2n-1.
QuadratureRule gauss_legendre(int n, double a, double b);

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

/// Adaptive panel-splitting Gauss-Legendre on a finite interval.
/// Throws convergence_error if the panel budget is exhausted.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = kQuadTol, int max_panels = 200000);

/// Integral of f over [0, inf) for integrands with f(t) ~ tail_coeff / t^2.
/// Truncates at T chosen so the analytic tail bound |tail_coeff|/T is below
/// abs_tol/10, integrates [0, T] in geometrically growing panels, and adds
/// the tail estimate tail_coeff/T.
double integrate_semi_infinite(const std::function<double(double)>& f, double tail_coeff,
                               double abs_tol = kQuadTol);

struct RootResult {
    double root = 0.0;
    double residual = 0.0; // f(root), signed
    int iterations = 0;
    bool converged = false;
    std::vector<double> residual_trace; // best |f| seen after each iteration; non-increasing
};

/// Bisection on [lo, hi]; requires f(lo)*f(hi) < 0 (throws std::invalid_argument
/// otherwise). Converges when the bracket width or |f| drops below tol; the
/// returned root is the smallest-|f| point examined.
RootResult find_root_bisect(const std::function<double(double)>& f, double lo, double hi,
                            double tol = kRootTol, int max_iter = 200);

} // namespace dosym
