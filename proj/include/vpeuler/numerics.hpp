#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace vpeuler::numerics {

/// Bisection on [a, b]. Requires f(a) and f(b) of opposite (or zero) sign.
/// Stops when the bracket width drops below rel_tol * (1 + |midpoint|) or an
/// evaluation hits zero exactly.
double bisect(const std::function<double(double)>& f, double a, double b,
              double rel_tol = 1e-14, int max_iter = 200);

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol = 1e-12, int max_depth = 48);

/// Nodes/weights of the 3-point Gauss-Legendre rule mapped to [a, b].
struct Gauss3 {
    double x[3];
    double w[3];
    Gauss3(double a, double b);
};

/// Least-squares slope of y against x.
double regression_slope(const std::vector<double>& x,
                        const std::vector<double>& y);

}  // namespace vpeuler::numerics
