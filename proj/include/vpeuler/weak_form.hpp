#pragma once

#include <functional>
#include <vector>

#include "vpeuler/bumps.hpp"
#include "vpeuler/wave_fan.hpp"

namespace vpeuler {

/// Integral of f over [x_lo, x_hi] x [max(t_lo, 0), t_hi], splitting the
/// x-integration at the rays x = xi * t (and the t-integration where those
/// rays cross the x-boundaries) so each quadrature piece is smooth.
double integrate_space_time(const std::function<double(double, double)>& f,
                            double x_lo, double x_hi, double t_lo, double t_hi,
                            const std::vector<double>& rays,
                            double abs_tol = 1e-10);

/// Residuals of the two conservation laws of the fan's model, integrated
/// against a test function:
///
///   u-eq:   integral of u phi_t + F(u, rho) phi_x  (+ initial-data term)
///   rho-eq: integral of rho phi_t + rho u phi_x    (+ initial-data term
///           + the delta-wave pairing for measure-valued fans)
///
/// Both vanish (to quadrature accuracy) iff the fan is a weak solution.
struct WeakFormResidual {
    double u_eq = 0.0;
    double rho_eq = 0.0;
    double total() const;
};

WeakFormResidual weak_form_residual_parts(const WaveFan& fan,
                                          const SpaceTimeBump& phi,
                                          double abs_tol = 1e-10);

/// |u-eq residual| + |rho-eq residual|.
double weak_form_residual(const WaveFan& fan, const SpaceTimeBump& phi,
                          double abs_tol = 1e-10);

}  // namespace vpeuler
