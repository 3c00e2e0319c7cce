#pragma once

#include "vpeuler/limit_analysis.hpp"
#include "vpeuler/wave_fan.hpp"
#include "vpeuler/weak_form.hpp"

namespace vpeuler {

/// Closed-form Riemann solvers for the shifted-flux system
///
///   u_t + ((u + eps)^2 / 2)_x = 0,   rho_t + (rho u)_x = 0.
///
/// The first characteristic field (lambda1 = u) is linearly degenerate, so
/// family-1 waves are contacts; the second (lambda2 = u + eps) is genuinely
/// nonlinear.

/// u_l < u_r: contact at speed u_l down to rho* = rho_r exp((u_l - u_r)/eps),
/// then a 2-rarefaction carrying (x/t - eps, rho_r exp((x/t - (u_r+eps))/eps))
/// for x/t in (u_l + eps, u_r + eps).
WaveFan alt_solve_rarefaction(const RiemannData& data, double eps);

/// Bounded-variation window 0 <= u_l - u_r <= eps: contact at speed u_l to
/// (u_l, rho*) with rho* = rho_r (eps + (u_l-u_r)/2) / (eps - (u_l-u_r)/2),
/// then a 2-shock at speed (u_l + u_r)/2 + eps. Throws DenominatorVanishing
/// outside the window (the formula's pole sits at u_l - u_r = 2 eps).
WaveFan alt_solve_small_shock(const RiemannData& data, double eps);

/// u_l - u_r > eps: no BV solution exists; the measure solution carries a
/// delta wave at speed (u_l + u_r)/2 + eps with weight coefficient
/// (u_l - u_r)(rho_l + rho_r)/2 + eps (rho_r - rho_l) and u = speed on the
/// line.
WaveFan alt_solve_delta(const RiemannData& data, double eps);

/// Regime dispatch: rarefaction for u_l < u_r, small shock for
/// 0 <= u_l - u_r <= eps, delta wave beyond.
WaveFan alt_solve(const RiemannData& data, double eps);

/// eps -> 0 limit of the shifted-flux solutions; coincident with the
/// scaled-pressure model's predicted_limit.
LimitSolution alt_limit(const RiemannData& data);

/// Weak-form residual of a shifted-flux fan (including the delta pairing).
double alt_weak_residual(const WaveFan& fan, const SpaceTimeBump& phi,
                         double abs_tol = 1e-10);

}  // namespace vpeuler
