#pragma once

#include <utility>
#include <vector>

#include "vpeuler/wave_fan.hpp"

namespace vpeuler {

/// Uniform 1-D grid and run parameters for the finite-volume reference
/// solver.
struct Grid1D {
    double x_min = -1.0;
    double x_max = 1.0;
    int n_cells = 1000;
    double cfl = 0.9;
    double t_end = 0.4;
};

/// Cell data at t_end plus bookkeeping of the run.
struct GridSolution {
    std::vector<double> x;    // cell centers
    std::vector<double> u;    // conserved u per cell
    std::vector<double> rho;  // density per cell
    double dx = 0.0;
    double t_end = 0.0;
    long steps = 0;
    std::vector<double> dt_history;
    double mass_balance_error = 0.0;  // relative defect of the rho balance
    double u_balance_error = 0.0;     // same for the u equation
};

/// First-order Lax-Friedrichs run for the eps-scaled pressure system with
/// flux (u^2/2 + eps p(rho), rho u). The first conserved variable is u
/// itself. Ghost cells copy the boundary cells; the run aborts with
/// std::domain_error if the waves reach the boundary before t_end, and with
/// BlowUpDetected if a cell becomes non-finite.
GridSolution lax_friedrichs_run(const RiemannData& data, double eps,
                                const Grid1D& grid,
                                const PressureLaw& law =
                                    default_pressure_law());

/// Cell-averaged L1 distances (u, rho) between the exact fan sampled at
/// sol.t_end (3-point Gauss per cell) and the grid solution.
std::pair<double, double> compare_l1(const WaveFan& exact,
                                     const GridSolution& sol);

/// L1 norms of the exact solution on the grid's window (same cell-averaged
/// quadrature), for forming relative errors.
std::pair<double, double> exact_l1_norms(const WaveFan& exact,
                                         const GridSolution& sol);

}  // namespace vpeuler
