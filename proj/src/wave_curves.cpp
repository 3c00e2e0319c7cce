#include "vpeuler/wave_curves.hpp"

#include <cmath>
#include <string>

#include "vpeuler/errors.hpp"
#include "vpeuler/numerics.hpp"

namespace vpeuler {

namespace {

void check_family(int family) {
    if (family != 1 && family != 2) {
        throw std::domain_error("wave family must be 1 or 2");
    }
}

// Root of (du)^2 (rho + rho_a)/2 = eps (rho - rho_a)(p(rho) - p(rho_a)) on
// [rho_a, inf). The right-hand side is strictly increasing in rho (p and p'
// increasing), so the bracket [rho_a, R] with R doubled until sign change is
// safe and bisection needs no derivative information.
double shock_branch_rho(const State& anchor, double du_sq, double eps,
                        const PressureLaw& law) {
    if (!(anchor.rho > 0.0)) {
        throw std::domain_error("shock branch: anchor density must be > 0");
    }
    require_positive_epsilon(eps);
    if (du_sq == 0.0) return anchor.rho;

    const double p_a = law.value(anchor.rho);
    auto residual = [&](double rho) {
        return du_sq * (rho + anchor.rho) / 2.0 -
               eps * (rho - anchor.rho) * (law.value(rho) - p_a);
    };

    const double cap = law.overflow_density();
    double hi = anchor.rho + 1.0;
    bool bracketed = false;
    while (true) {
        if (hi >= cap) {
            hi = cap;
            bracketed = residual(hi) <= 0.0;
            break;
        }
        if (residual(hi) <= 0.0) {
            bracketed = true;
            break;
        }
        hi *= 2.0;
    }
    if (!bracketed) {
        throw OverflowAtVanishingEpsilon(
            "shock branch root exceeds the representable density bound " +
            std::to_string(cap) + "; use the log-domain solver");
    }
    // run the bracket down to one ulp: the residual slope grows with the
    // root, and the re-substitution bound must hold there too
    return numerics::bisect(residual, anchor.rho, hi, 0.0);
}

}  // namespace

double hugoniot_residual(const State& anchor, const State& cand, double eps,
                         const PressureLaw& law) {
    if (!(anchor.rho > 0.0) || !(cand.rho > 0.0)) {
        throw std::domain_error("hugoniot_residual: densities must be > 0");
    }
    const double du = cand.u - anchor.u;
    const double lhs = du * du * (cand.rho + anchor.rho) / 2.0;
    const double rhs =
        eps * (cand.rho - anchor.rho) * (law.value(cand.rho) - law.value(anchor.rho));
    return lhs - rhs;
}

double shock1_rho_of_u(const State& left, double u, double eps,
                       const PressureLaw& law) {
    if (u > left.u) {
        throw std::domain_error("shock1_rho_of_u: requires u <= left.u");
    }
    const double du = u - left.u;
    return shock_branch_rho(left, du * du, eps, law);
}

double shock2_rho_of_u(const State& right, double u, double eps,
                       const PressureLaw& law) {
    if (u < right.u) {
        throw std::domain_error("shock2_rho_of_u: requires u >= right.u");
    }
    const double du = u - right.u;
    return shock_branch_rho(right, du * du, eps, law);
}

double shock_speed(const State& left, const State& right) {
    if (left.rho == right.rho) {
        throw DegenerateJump(
            "shock_speed: equal densities; use the velocity-equation form");
    }
    return (right.rho * right.u - left.rho * left.u) / (right.rho - left.rho);
}

double shock_speed_from_velocity_jump(const State& left, const State& right,
                                      double eps, const PressureLaw& law) {
    if (left.u == right.u) {
        throw DegenerateJump(
            "shock_speed_from_velocity_jump: equal velocities");
    }
    const double dp = law.value(right.rho) - law.value(left.rho);
    return 0.5 * (left.u + right.u) + eps * dp / (right.u - left.u);
}

bool lax_admissible(const ShockJump& jump, double eps, const PressureLaw& law) {
    if (!(jump.left.rho > 0.0) || !(jump.right.rho > 0.0)) {
        throw std::domain_error("lax_admissible: densities must be > 0");
    }
    check_family(jump.family);
    const double s = jump.speed;
    if (jump.family == 1) {
        return s < lambda1(jump.left.u, jump.left.rho, eps, law) &&
               lambda1(jump.right.u, jump.right.rho, eps, law) < s &&
               s < lambda2(jump.right.u, jump.right.rho, eps, law);
    }
    return lambda2(jump.right.u, jump.right.rho, eps, law) < s &&
           s < lambda2(jump.left.u, jump.left.rho, eps, law) &&
           lambda1(jump.left.u, jump.left.rho, eps, law) < s;
}

double rarefaction_u_on_curve(const State& anchor, int family, double rho,
                              double eps, const PressureLaw& law) {
    check_family(family);
    require_positive_epsilon(eps);
    if (rho < 0.0) {
        throw std::domain_error("rarefaction curve: rho must be >= 0");
    }
    const double sign = (family == 1) ? -1.0 : 1.0;
    return anchor.u +
           sign * std::sqrt(eps) * law.rarefaction_integral(anchor.rho, rho);
}

double rarefaction1_u_of_rho(const State& anchor, double rho, double eps,
                             const PressureLaw& law) {
    if (rho < 0.0 || rho > anchor.rho) {
        throw std::domain_error(
            "rarefaction1_u_of_rho: branch domain is 0 <= rho <= anchor.rho");
    }
    return rarefaction_u_on_curve(anchor, 1, rho, eps, law);
}

double rarefaction2_u_of_rho(const State& anchor, double rho, double eps,
                             const PressureLaw& law) {
    if (rho < anchor.rho) {
        throw std::domain_error(
            "rarefaction2_u_of_rho: branch domain is rho >= anchor.rho");
    }
    return rarefaction_u_on_curve(anchor, 2, rho, eps, law);
}

double lambda_on_curve(const State& anchor, int family, double rho, double eps,
                       const PressureLaw& law) {
    const double u = rarefaction_u_on_curve(anchor, family, rho, eps, law);
    if (rho == 0.0) return u;  // both speeds degenerate to u at vacuum
    return (family == 1) ? lambda1(u, rho, eps, law)
                         : lambda2(u, rho, eps, law);
}

State rarefaction_fan_state(const State& anchor, int family, double xi,
                            double eps, const PressureLaw& law) {
    check_family(family);
    const double xi_anchor = lambda_on_curve(anchor, family, anchor.rho, eps, law);
    const double xi_vacuum = lambda_on_curve(anchor, family, 0.0, eps, law);
    const double lo = std::min(xi_anchor, xi_vacuum);
    const double hi = std::max(xi_anchor, xi_vacuum);
    const double slack = 1e-12 * (1.0 + std::fabs(lo) + std::fabs(hi));
    if (xi < lo - slack || xi > hi + slack) {
        throw std::domain_error("rarefaction_fan_state: xi outside the fan");
    }
    const double xi_c = std::min(std::max(xi, lo), hi);
    if (xi_c == xi_anchor) return anchor;

    // lambda_family is strictly monotone in rho along the curve.
    const double rho = numerics::bisect(
        [&](double r) { return lambda_on_curve(anchor, family, r, eps, law) - xi_c; },
        0.0, anchor.rho, 1e-14);
    return State{rarefaction_u_on_curve(anchor, family, rho, eps, law), rho};
}

}  // namespace vpeuler
