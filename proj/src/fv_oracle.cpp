#include "vpeuler/fv_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vpeuler/errors.hpp"
#include "vpeuler/numerics.hpp"

namespace vpeuler {

namespace {

void validate_grid(const Grid1D& grid) {
    if (grid.n_cells < 16) {
        throw std::domain_error("Grid1D: n_cells must be >= 16");
    }
    if (!(grid.cfl > 0.0) || !(grid.cfl < 1.0)) {
        throw std::domain_error("Grid1D: cfl must lie in (0, 1)");
    }
    if (!(grid.x_min < 0.0) || !(grid.x_max > 0.0)) {
        throw std::domain_error("Grid1D: window must satisfy x_min < 0 < x_max");
    }
    if (!(grid.t_end > 0.0)) {
        throw std::domain_error("Grid1D: t_end must be > 0");
    }
}

// compensated accumulator for the conservation bookkeeping
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double v) {
        const double y = v - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

double kahan_total(const std::vector<double>& v) {
    KahanSum k;
    for (double x : v) k.add(x);
    return k.s;
}

}  // namespace

GridSolution lax_friedrichs_run(const RiemannData& data, double eps,
                                const Grid1D& grid, const PressureLaw& law) {
    require_positive_densities(data);
    require_positive_epsilon(eps);
    validate_grid(grid);

    const int n = grid.n_cells;
    const double dx = (grid.x_max - grid.x_min) / n;

    GridSolution sol;
    sol.dx = dx;
    sol.t_end = grid.t_end;
    sol.x.resize(n);
    sol.u.resize(n);
    sol.rho.resize(n);
    for (int i = 0; i < n; ++i) {
        sol.x[i] = grid.x_min + (i + 0.5) * dx;
        const State& s = sol.x[i] < 0.0 ? data.left : data.right;
        sol.u[i] = s.u;
        sol.rho[i] = s.rho;
    }

    std::vector<double> fu(n), frho(n), un(n), rhon(n);
    const double mass0 = kahan_total(sol.rho) * dx;
    const double ucons0 = kahan_total(sol.u) * dx;
    KahanSum influx_rho, influx_u;
    double t = 0.0;

    // The outflow accounting below assumes the edge cells still hold the
    // initial constant states.
    auto edges_clean = [&]() {
        const double tol = 1e-11;
        auto near = [tol](double a, double b) {
            return std::fabs(a - b) <= tol * (1.0 + std::fabs(b));
        };
        return near(sol.u[1], data.left.u) && near(sol.rho[1], data.left.rho) &&
               near(sol.u[n - 2], data.right.u) &&
               near(sol.rho[n - 2], data.right.rho);
    };

    while (t < grid.t_end) {
        double max_speed = 0.0;
        for (int i = 0; i < n; ++i) {
            fu[i] = 0.5 * sol.u[i] * sol.u[i] + eps * law.value(sol.rho[i]);
            frho[i] = sol.rho[i] * sol.u[i];
            const double c =
                std::sqrt(eps * law.derivative(sol.rho[i]) * sol.rho[i]);
            max_speed = std::max(max_speed, std::fabs(sol.u[i]) + c);
        }
        if (max_speed <= 0.0) break;  // identically at rest
        double dt = grid.cfl * dx / max_speed;
        dt = std::min(dt, grid.t_end - t);

        const double lam = dt / (2.0 * dx);
        for (int i = 0; i < n; ++i) {
            const int im = std::max(i - 1, 0);       // ghost copies cell 0
            const int ip = std::min(i + 1, n - 1);   // ghost copies cell n-1
            un[i] = 0.5 * (sol.u[im] + sol.u[ip]) - lam * (fu[ip] - fu[im]);
            rhon[i] =
                0.5 * (sol.rho[im] + sol.rho[ip]) - lam * (frho[ip] - frho[im]);
            if (!std::isfinite(un[i]) || !std::isfinite(rhon[i])) {
                throw BlowUpDetected(
                    "lax_friedrichs_run: non-finite cell " + std::to_string(i) +
                        " at step " + std::to_string(sol.steps),
                    sol.steps);
            }
        }
        sol.u.swap(un);
        sol.rho.swap(rhon);

        // with ghost copies the boundary fluxes are the physical fluxes of
        // the edge cells
        influx_rho.add(dt * (frho[0] - frho[n - 1]));
        influx_u.add(dt * (fu[0] - fu[n - 1]));

        t += dt;
        sol.dt_history.push_back(dt);
        ++sol.steps;

        if (!edges_clean()) {
            throw std::domain_error(
                "lax_friedrichs_run: waves reach the boundary before t_end; "
                "widen the window or reduce t_end");
        }
    }

    const double mass_end = kahan_total(sol.rho) * dx;
    const double ucons_end = kahan_total(sol.u) * dx;
    sol.mass_balance_error =
        std::fabs(mass_end - mass0 - influx_rho.s) / (std::fabs(mass0) + 1.0);
    sol.u_balance_error =
        std::fabs(ucons_end - ucons0 - influx_u.s) / (std::fabs(ucons0) + 1.0);
    return sol;
}

std::pair<double, double> compare_l1(const WaveFan& exact,
                                     const GridSolution& sol) {
    double eu = 0.0, erho = 0.0;
    for (std::size_t i = 0; i < sol.x.size(); ++i) {
        const numerics::Gauss3 g(sol.x[i] - 0.5 * sol.dx,
                                 sol.x[i] + 0.5 * sol.dx);
        double au = 0.0, arho = 0.0;
        for (int k = 0; k < 3; ++k) {
            const State s = sample(exact, g.x[k], sol.t_end);
            au += g.w[k] * s.u;
            arho += g.w[k] * s.rho;
        }
        eu += std::fabs(au / sol.dx - sol.u[i]) * sol.dx;
        erho += std::fabs(arho / sol.dx - sol.rho[i]) * sol.dx;
    }
    return {eu, erho};
}

std::pair<double, double> exact_l1_norms(const WaveFan& exact,
                                         const GridSolution& sol) {
    double nu = 0.0, nrho = 0.0;
    for (std::size_t i = 0; i < sol.x.size(); ++i) {
        const numerics::Gauss3 g(sol.x[i] - 0.5 * sol.dx,
                                 sol.x[i] + 0.5 * sol.dx);
        double au = 0.0, arho = 0.0;
        for (int k = 0; k < 3; ++k) {
            const State s = sample(exact, g.x[k], sol.t_end);
            au += g.w[k] * s.u;
            arho += g.w[k] * s.rho;
        }
        nu += std::fabs(au);
        nrho += std::fabs(arho);
    }
    return {nu, nrho};
}

}  // namespace vpeuler
