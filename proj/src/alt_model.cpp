#include "vpeuler/alt_model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "vpeuler/errors.hpp"

namespace vpeuler {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

WaveFan new_alt_fan(const RiemannData& data, double eps) {
    require_positive_densities(data);
    require_positive_epsilon(eps);
    WaveFan fan;
    fan.model = Model::flux_shift;
    fan.eps = eps;
    fan.law = nullptr;
    fan.data = data;
    return fan;
}

}  // namespace

WaveFan alt_solve_rarefaction(const RiemannData& data, double eps) {
    WaveFan fan = new_alt_fan(data, eps);
    const State& l = data.left;
    const State& r = data.right;
    if (!(l.u < r.u)) {
        throw std::domain_error("alt_solve_rarefaction: requires u_l < u_r");
    }
    const double rho_star = r.rho * std::exp((l.u - r.u) / eps);
    const State mid{l.u, rho_star};
    fan.segments = {
        {-kInf, l.u, ConstantSegment{l}},
        {l.u, l.u, ContactSegment{l.u, l, mid}},
        {l.u, l.u + eps, ConstantSegment{mid}},
        {l.u + eps, r.u + eps, RarefactionSegment{2, r, mid}},
        {r.u + eps, kInf, ConstantSegment{r}},
    };
    return fan;
}

WaveFan alt_solve_small_shock(const RiemannData& data, double eps) {
    WaveFan fan = new_alt_fan(data, eps);
    const State& l = data.left;
    const State& r = data.right;
    const double du = l.u - r.u;
    if (!(du >= 0.0)) {
        throw std::domain_error("alt_solve_small_shock: requires u_l >= u_r");
    }
    if (!(du <= eps)) {
        throw DenominatorVanishing(
            "alt_solve_small_shock: u_l - u_r = " + std::to_string(du) +
            " outside the bounded-variation window (0, eps = " +
            std::to_string(eps) + "]; the middle-state formula has its pole "
            "at u_l - u_r = 2 eps. Use alt_solve_delta.");
    }
    // middle density from the Rankine-Hugoniot relation of the trailing
    // 2-shock (speed (u_l+u_r)/2 + eps) against the right state
    const double rho_star = r.rho * (eps + 0.5 * du) / (eps - 0.5 * du);
    const State mid{l.u, rho_star};
    const double s2 = 0.5 * (l.u + r.u) + eps;
    fan.segments = {
        {-kInf, l.u, ConstantSegment{l}},
        {l.u, l.u, ContactSegment{l.u, l, mid}},
        {l.u, s2, ConstantSegment{mid}},
        {s2, s2, ShockSegment{ShockJump{mid, r, s2, 2}}},
        {s2, kInf, ConstantSegment{r}},
    };
    return fan;
}

WaveFan alt_solve_delta(const RiemannData& data, double eps) {
    WaveFan fan = new_alt_fan(data, eps);
    const State& l = data.left;
    const State& r = data.right;
    const double du = l.u - r.u;
    if (!(du > eps)) {
        throw std::domain_error(
            "alt_solve_delta: requires u_l - u_r > eps (BV window applies)");
    }
    const double speed = 0.5 * (l.u + r.u) + eps;
    const double eps_correction = eps * (r.rho - l.rho);
    const double w0 = 0.5 * du * (l.rho + r.rho) + eps_correction;
    fan.segments = {
        {-kInf, speed, ConstantSegment{l}},
        {speed, speed, DeltaSegment{speed, w0, speed, eps_correction}},
        {speed, kInf, ConstantSegment{r}},
    };
    return fan;
}

WaveFan alt_solve(const RiemannData& data, double eps) {
    require_positive_densities(data);
    require_positive_epsilon(eps);
    const double du = data.left.u - data.right.u;
    if (du < 0.0) return alt_solve_rarefaction(data, eps);
    if (du <= eps) return alt_solve_small_shock(data, eps);
    return alt_solve_delta(data, eps);
}

LimitSolution alt_limit(const RiemannData& data) {
    require_positive_densities(data);
    const State& l = data.left;
    const State& r = data.right;
    LimitSolution lim;
    lim.data = data;
    if (l.u < r.u) {
        // vacuum between u_l t and u_r t, as in the rarefaction limit
        lim.kind = LimitKind::vacuum;
        lim.delta = DeltaShockDescriptor{0.0, 0.0, 0.0};
        return lim;
    }
    // delta speed (u_l+u_r)/2 + eps and weight w0(eps) t with eps -> 0
    const double speed = 0.5 * (l.u + r.u);
    const double w0 = 0.5 * (l.u - r.u) * (l.rho + r.rho);
    if (l.u == r.u) {
        lim.kind = LimitKind::contact;
        lim.delta = DeltaShockDescriptor{speed, w0, speed};  // w0 == 0
        return lim;
    }
    lim.kind = LimitKind::delta_shock;
    lim.delta = DeltaShockDescriptor{speed, w0, speed};
    return lim;
}

double alt_weak_residual(const WaveFan& fan, const SpaceTimeBump& phi,
                         double abs_tol) {
    if (fan.model != Model::flux_shift) {
        throw std::domain_error("alt_weak_residual: fan is not a shifted-flux fan");
    }
    return weak_form_residual(fan, phi, abs_tol);
}

}  // namespace vpeuler
