#include "vpeuler/riemann_solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "vpeuler/errors.hpp"
#include "vpeuler/numerics.hpp"

namespace vpeuler {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

WaveFan new_fan(const RiemannData& data, double eps, const PressureLaw& law) {
    WaveFan fan;
    fan.model = Model::pressure;
    fan.eps = eps;
    fan.law = &law;
    fan.data = data;
    return fan;
}

// Velocity reached from `right` backward along the admissible 2-shock
// branch at density rho >= right.rho (positive root of the Hugoniot
// relation: these states have u > right.u).
double shock2_u_of_rho(const State& right, double rho, double eps,
                       const PressureLaw& law) {
    const double f = 2.0 * eps * (rho - right.rho) *
                     (law.value(rho) - law.value(right.rho)) /
                     (rho + right.rho);
    return right.u + std::sqrt(std::max(f, 0.0));
}

// Velocity reached from `left` forward along the admissible 1-shock branch
// at density rho >= left.rho (u decreases along the branch).
double shock1_u_of_rho(const State& left, double rho, double eps,
                       const PressureLaw& law) {
    const double f = 2.0 * eps * (rho - left.rho) *
                     (law.value(rho) - law.value(left.rho)) /
                     (rho + left.rho);
    return left.u - std::sqrt(std::max(f, 0.0));
}

}  // namespace

std::pair<IntermediateState, WaveFan> solve_two_shock(const RiemannData& data,
                                                      double eps,
                                                      const PressureLaw& law) {
    require_positive_densities(data);
    require_positive_epsilon(eps);
    const State& l = data.left;
    const State& r = data.right;
    if (!(l.u > r.u)) {
        throw std::domain_error("solve_two_shock: requires u_l > u_r");
    }

    // Validity threshold, checked constructively: each branch evaluated at
    // the opposite velocity must overshoot the opposite density, otherwise
    // the branches cannot intersect above both data densities.
    const double rho1_at_ur = shock1_rho_of_u(l, r.u, eps, law);
    const double rho2_at_ul = shock2_rho_of_u(r, l.u, eps, law);
    if (!(rho1_at_ur > r.rho) || !(rho2_at_ul > l.rho)) {
        throw EpsilonTooLarge(
            "solve_two_shock: eps = " + std::to_string(eps) +
            " exceeds the validity threshold for this data "
            "(rho1*(u_r) = " + std::to_string(rho1_at_ur) +
            " vs rho_r = " + std::to_string(r.rho) +
            ", rho2*(u_l) = " + std::to_string(rho2_at_ul) +
            " vs rho_l = " + std::to_string(l.rho) + ")");
    }

    // Both branch functions are defined only one-sidedly at u_r and u_l, so
    // bisect on a slightly inset interval.
    const double inset = 1e-12 * (l.u - r.u);
    auto branch_gap = [&](double u) {
        return shock1_rho_of_u(l, u, eps, law) - shock2_rho_of_u(r, u, eps, law);
    };
    const double a = r.u + inset;
    const double b = l.u - inset;
    if (!(branch_gap(a) > 0.0) || !(branch_gap(b) < 0.0)) {
        throw EpsilonTooLarge(
            "solve_two_shock: branch intersection not bracketed on (u_r, u_l)");
    }
    const double u_star = numerics::bisect(branch_gap, a, b, 1e-14);
    const double rho_star = shock1_rho_of_u(l, u_star, eps, law);
    const State star{u_star, rho_star};

    const double s1 = shock_speed(l, star);
    const double s2 = shock_speed(star, r);
    if (!(s1 < s2)) {
        throw NumericError("solve_two_shock: shock speeds not ordered");
    }

    WaveFan fan = new_fan(data, eps, law);
    fan.segments = {
        {-kInf, s1, ConstantSegment{l}},
        {s1, s1, ShockSegment{ShockJump{l, star, s1, 1}}},
        {s1, s2, ConstantSegment{star}},
        {s2, s2, ShockSegment{ShockJump{star, r, s2, 2}}},
        {s2, kInf, ConstantSegment{r}},
    };
    return {IntermediateState{u_star, rho_star, eps}, fan};
}

std::pair<IntermediateState, WaveFan> solve_equal_u(const RiemannData& data,
                                                    double eps,
                                                    const PressureLaw& law) {
    require_positive_densities(data);
    require_positive_epsilon(eps);
    const State& l = data.left;
    const State& r = data.right;
    if (l.u != r.u) {
        throw std::domain_error("solve_equal_u: requires u_l == u_r");
    }

    WaveFan fan = new_fan(data, eps, law);
    if (l.rho == r.rho) {
        fan.segments = {{-kInf, kInf, ConstantSegment{l}}};
        return {IntermediateState{l.u, l.rho, eps}, fan};
    }

    if (r.rho < l.rho) {
        // 1-rarefaction down to (u*, rho*), then 2-shock to the right state.
        auto gap = [&](double rho) {
            return rarefaction_u_on_curve(l, 1, rho, eps, law) -
                   shock2_u_of_rho(r, rho, eps, law);
        };
        const double rho_star = numerics::bisect(gap, r.rho, l.rho, 1e-14);
        const double u_star = rarefaction_u_on_curve(l, 1, rho_star, eps, law);
        const State star{u_star, rho_star};

        const double head = lambda1(l.u, l.rho, eps, law);
        const double tail = lambda1(u_star, rho_star, eps, law);
        const double s2 = shock_speed(star, r);
        fan.segments = {
            {-kInf, head, ConstantSegment{l}},
            {head, tail, RarefactionSegment{1, l, star}},
            {tail, s2, ConstantSegment{star}},
            {s2, s2, ShockSegment{ShockJump{star, r, s2, 2}}},
            {s2, kInf, ConstantSegment{r}},
        };
        return {IntermediateState{u_star, rho_star, eps}, fan};
    }

    // rho_l < rho_r: 1-shock to (u*, rho*), then 2-rarefaction up to the
    // right state (u decreases along the 1-shock branch from u_l).
    auto gap = [&](double rho) {
        return shock1_u_of_rho(l, rho, eps, law) -
               rarefaction_u_on_curve(r, 2, rho, eps, law);
    };
    const double rho_star = numerics::bisect(gap, l.rho, r.rho, 1e-14);
    const double u_star = shock1_u_of_rho(l, rho_star, eps, law);
    const State star{u_star, rho_star};

    const double s1 = shock_speed(l, star);
    const double head = lambda2(u_star, rho_star, eps, law);
    const double tail = lambda2(r.u, r.rho, eps, law);
    fan.segments = {
        {-kInf, s1, ConstantSegment{l}},
        {s1, s1, ShockSegment{ShockJump{l, star, s1, 1}}},
        {s1, head, ConstantSegment{star}},
        {head, tail, RarefactionSegment{2, r, star}},
        {tail, kInf, ConstantSegment{r}},
    };
    return {IntermediateState{u_star, rho_star, eps}, fan};
}

WaveFan solve_two_rarefaction(const RiemannData& data, double eps,
                              const PressureLaw& law) {
    require_positive_densities(data);
    require_positive_epsilon(eps);
    const State& l = data.left;
    const State& r = data.right;
    if (!(l.u < r.u)) {
        throw std::domain_error("solve_two_rarefaction: requires u_l < u_r");
    }

    // Vacuum-edge velocities of the two fans.
    const double u_vac1 = rarefaction_u_on_curve(l, 1, 0.0, eps, law);
    const double u_vac2 = rarefaction_u_on_curve(r, 2, 0.0, eps, law);
    if (!(u_vac1 < u_vac2)) {
        throw RarefactionOverlap(
            "solve_two_rarefaction: rarefaction curves overlap at vacuum "
            "(u1(0) = " + std::to_string(u_vac1) +
            " >= u2(0) = " + std::to_string(u_vac2) + "); eps too large");
    }

    const double head1 = lambda1(l.u, l.rho, eps, law);
    const double tail2 = lambda2(r.u, r.rho, eps, law);
    WaveFan fan = new_fan(data, eps, law);
    fan.segments = {
        {-kInf, head1, ConstantSegment{l}},
        {head1, u_vac1, RarefactionSegment{1, l, State{u_vac1, 0.0}}},
        {u_vac1, u_vac2, VacuumSegment{}},
        {u_vac2, tail2, RarefactionSegment{2, r, State{u_vac2, 0.0}}},
        {tail2, kInf, ConstantSegment{r}},
    };
    return fan;
}

WaveFan solve(const RiemannData& data, double eps, const PressureLaw& law) {
    require_positive_densities(data);
    if (data.left.u > data.right.u) {
        return solve_two_shock(data, eps, law).second;
    }
    if (data.left.u == data.right.u) {
        return solve_equal_u(data, eps, law).second;
    }
    return solve_two_rarefaction(data, eps, law);
}

}  // namespace vpeuler
