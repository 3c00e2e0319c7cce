#pragma once

#include "vpeuler/pressure_law.hpp"
#include "vpeuler/types.hpp"

namespace vpeuler {

/// A discontinuity between two states, with its speed and Lax family.
struct ShockJump {
    State left;
    State right;
    double speed = 0.0;
    int family = 0;  // 1 or 2
};

/// Residual of the Hugoniot relation through `anchor` evaluated at `cand`:
///
///   (u - u_a)^2 (rho + rho_a)/2 - eps (rho - rho_a)(p(rho) - p(rho_a))
///
/// Zero iff `cand` lies on the Hugoniot locus of `anchor`. Both densities
/// must be positive.
double hugoniot_residual(const State& anchor, const State& cand, double eps,
                         const PressureLaw& law = default_pressure_law());

/// Density on the admissible 1-shock branch through `left` at velocity
/// u <= left.u: the unique rho >= left.rho solving the Hugoniot relation.
/// Decreasing in u. Throws OverflowAtVanishingEpsilon when the root lies
/// beyond the law's overflow bound.
double shock1_rho_of_u(const State& left, double u, double eps,
                       const PressureLaw& law = default_pressure_law());

/// Density on the backward admissible 2-shock branch through `right` at
/// velocity u >= right.u (states that connect to `right` by a 2-shock).
/// Increasing in u; same overflow contract as shock1_rho_of_u.
double shock2_rho_of_u(const State& right, double u, double eps,
                       const PressureLaw& law = default_pressure_law());

/// Shock speed from the mass equation, (rho_r u_r - rho_l u_l)/(rho_r -
/// rho_l). Equal densities throw DegenerateJump; use
/// shock_speed_from_velocity_jump for that case.
double shock_speed(const State& left, const State& right);

/// Shock speed from the velocity equation,
/// (u_l + u_r)/2 + eps (p(rho_r) - p(rho_l)) / (u_r - u_l).
/// Requires u_l != u_r.
double shock_speed_from_velocity_jump(const State& left, const State& right,
                                      double eps,
                                      const PressureLaw& law =
                                          default_pressure_law());

/// Lax admissibility: the three strict characteristic inequalities of the
/// declared family.
///   family 1:  lambda1(right) < s < lambda1(left)  and  s < lambda2(right)
///   family 2:  lambda2(right) < s < lambda2(left)  and  s > lambda1(left)
bool lax_admissible(const ShockJump& jump, double eps,
                    const PressureLaw& law = default_pressure_law());

/// Velocity on the rarefaction integral curve of the given family through
/// `anchor`, at density rho:
///
///   u = u_a -/+ integral_{rho_a}^{rho} sqrt(eps p'(x)/x) dx
///
/// Defined for every rho >= 0; the *_u_of_rho wrappers below restrict to the
/// admissible branch.
double rarefaction_u_on_curve(const State& anchor, int family, double rho,
                              double eps,
                              const PressureLaw& law = default_pressure_law());

/// Family-1 branch through `anchor` (a fan's left edge): 0 <= rho <= anchor.rho.
double rarefaction1_u_of_rho(const State& anchor, double rho, double eps,
                             const PressureLaw& law = default_pressure_law());

/// Family-2 branch through `anchor`: rho >= anchor.rho.
double rarefaction2_u_of_rho(const State& anchor, double rho, double eps,
                             const PressureLaw& law = default_pressure_law());

/// lambda_family evaluated along the rarefaction curve through `anchor`.
double lambda_on_curve(const State& anchor, int family, double rho, double eps,
                       const PressureLaw& law = default_pressure_law());

/// State inside a rarefaction fan: the (u(rho), rho) on the family's curve
/// through `anchor` whose characteristic speed equals the similarity
/// coordinate xi = x/t. `anchor` is the fan's data-side edge (left edge for
/// family 1, right edge for family 2); xi must lie between the fan's edge
/// speed lambda_family(anchor) and the vacuum-edge speed u(rho = 0).
State rarefaction_fan_state(const State& anchor, int family, double xi,
                            double eps,
                            const PressureLaw& law = default_pressure_law());

}  // namespace vpeuler
