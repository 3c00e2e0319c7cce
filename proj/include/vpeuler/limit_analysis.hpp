#pragma once

#include <functional>
#include <vector>

#include "vpeuler/bumps.hpp"
#include "vpeuler/riemann_solver.hpp"

namespace vpeuler {

/// The measure component of a vanishing-perturbation limit: a Dirac mass in
/// rho on the line x = speed * t with weight weight_coefficient * t,
/// carrying velocity carried_u.
struct DeltaShockDescriptor {
    double speed = 0.0;
    double weight_coefficient = 0.0;
    double carried_u = 0.0;
};

enum class LimitKind {
    delta_shock,  // u_l > u_r
    contact,      // u_l == u_r: density jump along x = u_l t
    vacuum,       // u_l < u_r: rho = 0, u = x/t between u_l t and u_r t
};

/// Predicted limit of the Riemann solution as the perturbation vanishes.
struct LimitSolution {
    LimitKind kind = LimitKind::contact;
    RiemannData data;
    DeltaShockDescriptor delta;  // zero-weight for contact/vacuum kinds
};

LimitSolution predicted_limit(const RiemannData& data);

/// One entry of an eps-sweep over two-shock solutions.
struct SweepRecord {
    double eps = 0.0;
    double u_star = 0.0;
    double log_rho_star = 0.0;
    double eps_p_rho_star = 0.0;  // eps * p(rho*), log-domain safe
    double s1 = 0.0;
    double s2 = 0.0;
    double d_coeff = 0.0;  // rho* (s2 - s1), the per-t delta-weight estimate
    double err_u = 0.0;    // |u* - (u_l+u_r)/2|
    double err_l = 0.0;    // |eps p(rho*) - (u_l-u_r)^2/8|
    double err_w = 0.0;    // |d_coeff - w0|
};

/// Star state of the two-shock solution computed entirely through log p, so
/// the construction stays evaluable when p(rho*) leaves the representable
/// range. Valid for any eps below the validity threshold.
struct LogDomainStar {
    double u_star = 0.0;
    double log_rho_star = 0.0;
    double rho_star = 0.0;
    double eps_p_star = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
};

LogDomainStar solve_two_shock_log(const RiemannData& data, double eps,
                                  const PressureLaw& law =
                                      default_pressure_law());

/// log rho*_eps via the log-domain solve.
double log_domain_rho_star(const RiemannData& data, double eps,
                           const PressureLaw& law = default_pressure_law());

/// Two-shock sweep over a strictly decreasing eps sequence (u_l > u_r).
/// Records switch to the log-domain solver for small eps and whenever the
/// direct path signals overflow.
std::vector<SweepRecord> epsilon_sweep(const RiemannData& data,
                                       const std::vector<double>& eps_list,
                                       const PressureLaw& law =
                                           default_pressure_law());

/// The eps-indexed ingredients of an indicator concentration
///   d_eps(t) / width_eps(t) * chi_(c(t)-a_eps(t), c(t)+b_eps(t))(x),
/// width = a_eps + b_eps, together with the limit weight d(t) on x = c(t).
struct IndicatorFamilies {
    std::function<double(double eps, double t)> a;
    std::function<double(double eps, double t)> b;
    std::function<double(double eps, double t)> d;
    std::function<double(double t)> c;
    std::function<double(double t)> d_limit;
};

/// For each eps: | <indicator concentration, phi> - <d(t) delta_{x=c(t)}, phi> |.
/// The pairing errors decrease along a sequence satisfying the
/// concentration hypotheses. Throws std::domain_error on width <= 0.
std::vector<double> indicator_delta_pairing(const IndicatorFamilies& fam,
                                            const SpaceTimeBump& phi,
                                            const std::vector<double>& eps_list,
                                            double abs_tol = 1e-10);

/// Families built from two-shock star states: a = (c - s1) t, b = (s2 - c) t,
/// d = rho* (s2 - s1) t, limit weight w0 t.
IndicatorFamilies two_shock_indicator_families(const RiemannData& data,
                                               const PressureLaw& law =
                                                   default_pressure_law());

/// | <rho^eps, phi> - <rho_limit + w(t) delta_{x=ct}, phi> | for the
/// two-shock solution at the given eps (u_l > u_r). eps == 0 compares the
/// limit against itself and returns 0.
double weak_measure_error(const RiemannData& data, double eps,
                          const SpaceTimeBump& phi,
                          const PressureLaw& law = default_pressure_law(),
                          double abs_tol = 1e-10);

}  // namespace vpeuler
