#include "vpeuler/weak_form.hpp"

#include <algorithm>
#include <cmath>

#include "vpeuler/numerics.hpp"

namespace vpeuler {

double WeakFormResidual::total() const {
    return std::fabs(u_eq) + std::fabs(rho_eq);
}

double integrate_space_time(const std::function<double(double, double)>& f,
                            double x_lo, double x_hi, double t_lo, double t_hi,
                            const std::vector<double>& rays, double abs_tol) {
    t_lo = std::max(t_lo, 0.0);
    if (!(t_hi > t_lo) || !(x_hi > x_lo)) return 0.0;

    // t-values where a ray enters or leaves the x-window
    std::vector<double> t_cuts{t_lo, t_hi};
    for (double xi : rays) {
        if (xi == 0.0) continue;
        for (double xb : {x_lo, x_hi}) {
            const double tc = xb / xi;
            if (tc > t_lo && tc < t_hi) t_cuts.push_back(tc);
        }
    }
    std::sort(t_cuts.begin(), t_cuts.end());

    const double t_span = t_hi - t_lo;
    const double inner_tol = abs_tol / (8.0 * t_span);
    auto slice = [&](double t) {
        std::vector<double> x_cuts{x_lo, x_hi};
        for (double xi : rays) {
            const double xc = xi * t;
            if (xc > x_lo && xc < x_hi) x_cuts.push_back(xc);
        }
        std::sort(x_cuts.begin(), x_cuts.end());
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < x_cuts.size(); ++i) {
            acc += numerics::adaptive_simpson(
                [&](double x) { return f(x, t); }, x_cuts[i], x_cuts[i + 1],
                inner_tol);
        }
        return acc;
    };

    double total = 0.0;
    const double outer_tol = abs_tol / (4.0 * std::max<std::size_t>(
                                                  1, t_cuts.size() - 1));
    for (std::size_t i = 0; i + 1 < t_cuts.size(); ++i) {
        total += numerics::adaptive_simpson(slice, t_cuts[i], t_cuts[i + 1],
                                            outer_tol);
    }
    return total;
}

namespace {

std::vector<double> fan_rays(const WaveFan& fan) {
    std::vector<double> rays;
    for (const Segment& seg : fan.segments) {
        if (std::isfinite(seg.xi_lo)) rays.push_back(seg.xi_lo);
        if (std::isfinite(seg.xi_hi)) rays.push_back(seg.xi_hi);
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    return rays;
}

State state_at(const WaveFan& fan, double x, double t) {
    if (t > 0.0) return sample(fan, x, t);
    return x < 0.0 ? fan.data.left : fan.data.right;
}

double flux_u(const WaveFan& fan, const State& s) {
    if (fan.model == Model::pressure) {
        return 0.5 * s.u * s.u + scaled_pressure(s.rho, fan.eps, *fan.law);
    }
    const double v = s.u + fan.eps;
    return 0.5 * v * v;
}

}  // namespace

WeakFormResidual weak_form_residual_parts(const WaveFan& fan,
                                          const SpaceTimeBump& phi,
                                          double abs_tol) {
    const std::vector<double> rays = fan_rays(fan);
    const double xl = phi.x_lo(), xh = phi.x_hi();
    const double tl = phi.t_lo(), th = phi.t_hi();

    WeakFormResidual res;
    res.u_eq = integrate_space_time(
        [&](double x, double t) {
            const State s = state_at(fan, x, t);
            return s.u * phi.dt(x, t) + flux_u(fan, s) * phi.dx(x, t);
        },
        xl, xh, tl, th, rays, abs_tol);
    res.rho_eq = integrate_space_time(
        [&](double x, double t) {
            const State s = state_at(fan, x, t);
            return s.rho * (phi.dt(x, t) + s.u * phi.dx(x, t));
        },
        xl, xh, tl, th, rays, abs_tol);

    // initial-data pairing (nonzero only if the support reaches t <= 0)
    if (tl < 0.0) {
        auto initial_term = [&](auto value_of) {
            double acc = 0.0;
            for (auto [a, b] : {std::pair{xl, std::min(0.0, xh)},
                                std::pair{std::max(0.0, xl), xh}}) {
                if (!(b > a)) continue;
                acc += numerics::adaptive_simpson(
                    [&](double x) {
                        const State& s = x < 0.0 ? fan.data.left : fan.data.right;
                        return value_of(s) * phi(x, 0.0);
                    },
                    a, b, abs_tol / 8.0);
            }
            return acc;
        };
        res.u_eq += initial_term([](const State& s) { return s.u; });
        res.rho_eq += initial_term([](const State& s) { return s.rho; });
    }

    // measure part of rho for delta-wave fans
    for (const Segment& seg : fan.segments) {
        if (const auto* d = std::get_if<DeltaSegment>(&seg.wave)) {
            const double t_from = std::max(tl, 0.0);
            if (!(th > t_from)) continue;
            res.rho_eq += numerics::adaptive_simpson(
                [&](double t) {
                    const double x = d->speed * t;
                    const double w = d->weight_coefficient * t;
                    return w * (phi.dt(x, t) + d->carried_u * phi.dx(x, t));
                },
                t_from, th, abs_tol / 8.0);
        }
    }
    return res;
}

double weak_form_residual(const WaveFan& fan, const SpaceTimeBump& phi,
                          double abs_tol) {
    return weak_form_residual_parts(fan, phi, abs_tol).total();
}

}  // namespace vpeuler
