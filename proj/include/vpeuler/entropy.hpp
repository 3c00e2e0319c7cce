#pragma once

#include <vector>

#include "vpeuler/riemann_solver.hpp"

namespace vpeuler {

/// Entropy eta(u, rho) = u^2/2 + eps e^rho of the eps-scaled pressure model
/// (strictly convex for eps > 0). Guarded against e^rho overflow like the
/// pressure law; use eps_exp_rho for the scaled value at large rho.
double eta(double u, double rho, double eps);

/// Matching entropy flux q(u, rho) = u^3/3 + eps rho u e^rho.
double q_flux(double u, double rho, double eps);

/// eps * e^rho evaluated through the log domain (finite whenever the
/// product is representable). Coincides with eps p'(rho)/rho.
double eps_exp_rho(double eps, double rho);

/// Entropy production of a jump: -s (eta_r - eta_l) + (q_r - q_l).
/// Non-positive for admissible shocks, positive for reversed ones.
double entropy_production_shock(const ShockJump& jump, double eps);

/// Limit of the total entropy production rate for u_l > u_r:
///   (u_l + u_r)/4 (u_l^2 - u_r^2) + (u_r^3 - u_l^3)/3,
/// algebraically -(u_l - u_r)^3 / 12.
double entropy_production_total_limit(const RiemannData& data);

struct EntropySweepRecord {
    double eps = 0.0;
    double production1 = 0.0;  // 1-shock
    double production2 = 0.0;  // 2-shock
    double total = 0.0;
    double cross_term = 0.0;  // eps e^{rho*} (s2 - s1)
    double err_total = 0.0;   // |total - limit production|
};

/// Per-eps entropy production of the two-shock solution (u_l > u_r). The
/// total converges to entropy_production_total_limit and the cross term
/// decreases to zero.
std::vector<EntropySweepRecord> entropy_limit_sweep(
    const RiemannData& data, const std::vector<double>& eps_list,
    const PressureLaw& law = default_pressure_law());

}  // namespace vpeuler
