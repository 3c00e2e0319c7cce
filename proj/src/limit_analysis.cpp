#include "vpeuler/limit_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <string>

#include "vpeuler/errors.hpp"
#include "vpeuler/numerics.hpp"
#include "vpeuler/weak_form.hpp"

namespace vpeuler {

LimitSolution predicted_limit(const RiemannData& data) {
    require_positive_densities(data);
    const double ul = data.left.u, ur = data.right.u;
    const double rl = data.left.rho, rr = data.right.rho;
    LimitSolution lim;
    lim.data = data;
    if (ul > ur) {
        lim.kind = LimitKind::delta_shock;
        const double c = 0.5 * (ul + ur);
        lim.delta = DeltaShockDescriptor{c, 0.5 * (ul - ur) * (rl + rr), c};
    } else if (ul == ur) {
        lim.kind = LimitKind::contact;
        lim.delta = DeltaShockDescriptor{ul, 0.0, ul};
    } else {
        lim.kind = LimitKind::vacuum;
        lim.delta = DeltaShockDescriptor{0.0, 0.0, 0.0};
    }
    return lim;
}

namespace {

// log of p(rho) - p(rho_anchor) for rho > rho_anchor
double log_p_gap(double rho, double rho_anchor, const PressureLaw& law) {
    const double la = law.log_value(rho_anchor);
    const double lb = law.log_value(rho);
    return lb + std::log1p(-std::exp(la - lb));
}

// Branch density in the log domain: the rho >= anchor.rho with
//   log(2 eps) + log(rho - rho_a) - log(rho + rho_a) + log(p(rho) - p(rho_a))
//   = log(du^2).
double log_branch_rho(const State& anchor, double du_sq, double eps,
                      const PressureLaw& law) {
    if (du_sq == 0.0) return anchor.rho;
    const double target = std::log(du_sq);
    const double base = std::log(2.0) + std::log(eps);
    auto f = [&](double rho) {
        return base + std::log(rho - anchor.rho) - std::log(rho + anchor.rho) +
               log_p_gap(rho, anchor.rho, law) - target;
    };
    double hi = anchor.rho + 1.0;
    while (f(hi) < 0.0) {
        hi *= 2.0;
        if (hi > 1e9) {
            throw NumericError("log_branch_rho: no root below rho = 1e9");
        }
    }
    return numerics::bisect(f, anchor.rho, hi, 1e-14);
}

}  // namespace

LogDomainStar solve_two_shock_log(const RiemannData& data, double eps,
                                  const PressureLaw& law) {
    require_positive_densities(data);
    require_positive_epsilon(eps);
    const State& l = data.left;
    const State& r = data.right;
    if (!(l.u > r.u)) {
        throw std::domain_error("solve_two_shock_log: requires u_l > u_r");
    }

    auto rho1 = [&](double u) {
        const double du = u - l.u;
        return log_branch_rho(l, du * du, eps, law);
    };
    auto rho2 = [&](double u) {
        const double du = u - r.u;
        return log_branch_rho(r, du * du, eps, law);
    };
    if (!(rho1(r.u) > r.rho) || !(rho2(l.u) > l.rho)) {
        throw EpsilonTooLarge(
            "solve_two_shock_log: eps exceeds the validity threshold");
    }

    const double inset = 1e-12 * (l.u - r.u);
    const double u_star = numerics::bisect(
        [&](double u) { return rho1(u) - rho2(u); }, r.u + inset, l.u - inset,
        1e-14);
    const double rho_star = rho1(u_star);

    LogDomainStar out;
    out.u_star = u_star;
    out.rho_star = rho_star;
    out.log_rho_star = std::log(rho_star);
    out.eps_p_star = std::exp(std::log(eps) + law.log_value(rho_star));
    // speeds from the velocity equation, which needs only eps * p values
    const double ep_l = scaled_pressure(l.rho, eps, law);
    const double ep_r = scaled_pressure(r.rho, eps, law);
    out.s1 = 0.5 * (u_star + l.u) + (out.eps_p_star - ep_l) / (u_star - l.u);
    out.s2 = 0.5 * (u_star + r.u) + (out.eps_p_star - ep_r) / (u_star - r.u);
    return out;
}

double log_domain_rho_star(const RiemannData& data, double eps,
                           const PressureLaw& law) {
    return solve_two_shock_log(data, eps, law).log_rho_star;
}

namespace {

SweepRecord make_record(const RiemannData& data, double eps, double u_star,
                        double rho_star, double eps_p_star, double s1,
                        double s2) {
    const LimitSolution lim = predicted_limit(data);
    const double du = data.left.u - data.right.u;
    SweepRecord rec;
    rec.eps = eps;
    rec.u_star = u_star;
    rec.log_rho_star = std::log(rho_star);
    rec.eps_p_rho_star = eps_p_star;
    rec.s1 = s1;
    rec.s2 = s2;
    rec.d_coeff = rho_star * (s2 - s1);
    rec.err_u = std::fabs(u_star - lim.delta.speed);
    rec.err_l = std::fabs(eps_p_star - du * du / 8.0);
    rec.err_w = std::fabs(rec.d_coeff - lim.delta.weight_coefficient);
    return rec;
}

// Below this eps the sweep always works through log p.
constexpr double kLogPathThreshold = 1e-4;

SweepRecord sweep_entry(const RiemannData& data, double eps,
                        const PressureLaw& law) {
    if (eps >= kLogPathThreshold) {
        try {
            auto [star, fan] = solve_two_shock(data, eps, law);
            const State mid{star.u_star, star.rho_star};
            return make_record(data, eps, star.u_star, star.rho_star,
                               scaled_pressure(star.rho_star, eps, law),
                               shock_speed(data.left, mid),
                               shock_speed(mid, data.right));
        } catch (const OverflowAtVanishingEpsilon&) {
            // fall through to the log-domain path
        }
    }
    const LogDomainStar star = solve_two_shock_log(data, eps, law);
    return make_record(data, eps, star.u_star, star.rho_star, star.eps_p_star,
                       star.s1, star.s2);
}

}  // namespace

std::vector<SweepRecord> epsilon_sweep(const RiemannData& data,
                                       const std::vector<double>& eps_list,
                                       const PressureLaw& law) {
    require_positive_densities(data);
    if (!(data.left.u > data.right.u)) {
        throw std::domain_error("epsilon_sweep: requires u_l > u_r");
    }
    if (eps_list.empty()) {
        throw std::domain_error("epsilon_sweep: empty eps list");
    }
    for (std::size_t i = 0; i + 1 < eps_list.size(); ++i) {
        if (!(eps_list[i + 1] < eps_list[i])) {
            throw std::domain_error(
                "epsilon_sweep: eps list must be strictly decreasing");
        }
    }
    std::vector<SweepRecord> records;
    records.reserve(eps_list.size());
    for (double eps : eps_list) {
        records.push_back(sweep_entry(data, eps, law));
    }
    return records;
}

std::vector<double> indicator_delta_pairing(const IndicatorFamilies& fam,
                                            const SpaceTimeBump& phi,
                                            const std::vector<double>& eps_list,
                                            double abs_tol) {
    const double t_lo = std::max(phi.t_lo(), 0.0);
    const double t_hi = phi.t_hi();
    if (!(t_hi > t_lo)) {
        return std::vector<double>(eps_list.size(), 0.0);
    }

    // limit pairing, shared by all eps
    const double limit_pairing = numerics::adaptive_simpson(
        [&](double t) { return fam.d_limit(t) * phi(fam.c(t), t); }, t_lo,
        t_hi, abs_tol / 4.0);

    std::vector<double> errors;
    errors.reserve(eps_list.size());
    for (double eps : eps_list) {
        auto slab = [&](double t) {
            const double a = fam.a(eps, t);
            const double b = fam.b(eps, t);
            const double width = a + b;
            if (!(width > 0.0)) {
                throw std::domain_error(
                    "indicator_delta_pairing: degenerate interval width");
            }
            const double lo = std::max(fam.c(t) - a, phi.x_lo());
            const double hi = std::min(fam.c(t) + b, phi.x_hi());
            if (!(hi > lo)) return 0.0;
            const double mass = numerics::adaptive_simpson(
                [&](double x) { return phi(x, t); }, lo, hi,
                abs_tol / (8.0 * (t_hi - t_lo)));
            return fam.d(eps, t) / width * mass;
        };
        const double pairing =
            numerics::adaptive_simpson(slab, t_lo, t_hi, abs_tol / 4.0);
        errors.push_back(std::fabs(pairing - limit_pairing));
    }
    return errors;
}

IndicatorFamilies two_shock_indicator_families(const RiemannData& data,
                                               const PressureLaw& law) {
    const LimitSolution lim = predicted_limit(data);
    if (lim.kind != LimitKind::delta_shock) {
        throw std::domain_error(
            "two_shock_indicator_families: requires u_l > u_r");
    }
    const double c = lim.delta.speed;
    const double w0 = lim.delta.weight_coefficient;
    // one star solve per eps, memoized
    auto star_of = std::make_shared<std::map<double, LogDomainStar>>();
    auto star = [star_of, data, &law](double eps) -> const LogDomainStar& {
        auto it = star_of->find(eps);
        if (it == star_of->end()) {
            it = star_of->emplace(eps, solve_two_shock_log(data, eps, law))
                     .first;
        }
        return it->second;
    };
    IndicatorFamilies fam;
    fam.a = [star, c](double eps, double t) { return (c - star(eps).s1) * t; };
    fam.b = [star, c](double eps, double t) { return (star(eps).s2 - c) * t; };
    fam.d = [star](double eps, double t) {
        const LogDomainStar& s = star(eps);
        return s.rho_star * (s.s2 - s.s1) * t;
    };
    fam.c = [c](double t) { return c * t; };
    fam.d_limit = [w0](double t) { return w0 * t; };
    return fam;
}

double weak_measure_error(const RiemannData& data, double eps,
                          const SpaceTimeBump& phi, const PressureLaw& law,
                          double abs_tol) {
    const LimitSolution lim = predicted_limit(data);
    if (lim.kind != LimitKind::delta_shock) {
        throw std::domain_error("weak_measure_error: requires u_l > u_r");
    }
    if (eps == 0.0) return 0.0;  // the limit measure compared against itself

    const LogDomainStar star = solve_two_shock_log(data, eps, law);
    const double rl = data.left.rho, rr = data.right.rho;
    const double c = lim.delta.speed;

    auto rho_eps = [&](double x, double t) {
        if (!(t > 0.0)) return x < 0.0 ? rl : rr;
        const double xi = x / t;
        if (xi < star.s1) return rl;
        if (xi < star.s2) return star.rho_star;
        return rr;
    };
    const double pairing_eps = integrate_space_time(
        [&](double x, double t) { return rho_eps(x, t) * phi(x, t); },
        phi.x_lo(), phi.x_hi(), phi.t_lo(), phi.t_hi(),
        {star.s1, star.s2}, abs_tol);

    auto rho_lim = [&](double x, double t) {
        if (!(t > 0.0)) return x < 0.0 ? rl : rr;
        return x / t < c ? rl : rr;
    };
    double pairing_lim = integrate_space_time(
        [&](double x, double t) { return rho_lim(x, t) * phi(x, t); },
        phi.x_lo(), phi.x_hi(), phi.t_lo(), phi.t_hi(), {c}, abs_tol);
    pairing_lim += numerics::adaptive_simpson(
        [&](double t) {
            return lim.delta.weight_coefficient * t * phi(c * t, t);
        },
        std::max(phi.t_lo(), 0.0), phi.t_hi(), abs_tol / 4.0);

    return std::fabs(pairing_eps - pairing_lim);
}

}  // namespace vpeuler
