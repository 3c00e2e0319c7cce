#pragma once

#include <utility>

#include "vpeuler/wave_fan.hpp"

namespace vpeuler {

/// The constant state separating the two waves of a Riemann fan.
struct IntermediateState {
    double u_star = 0.0;
    double rho_star = 0.0;
    double eps = 0.0;
};

/// Two-shock solution for u_l > u_r: the unique intersection of the
/// admissible 1-shock branch through the left state with the backward
/// 2-shock branch through the right state. Throws EpsilonTooLarge when the
/// bracketing condition rho1*(u_r) > rho_r, rho2*(u_l) > rho_l fails, and
/// propagates OverflowAtVanishingEpsilon from the branch solves.
std::pair<IntermediateState, WaveFan> solve_two_shock(
    const RiemannData& data, double eps,
    const PressureLaw& law = default_pressure_law());

/// Solution for u_l == u_r: trivial constant for rho_l == rho_r, otherwise
/// 1-rarefaction + 2-shock (rho_r < rho_l) or 1-shock + 2-rarefaction
/// (rho_l < rho_r), intersected in the (u, rho) plane.
std::pair<IntermediateState, WaveFan> solve_equal_u(
    const RiemannData& data, double eps,
    const PressureLaw& law = default_pressure_law());

/// Two rarefactions enclosing a vacuum region for u_l < u_r. Throws
/// RarefactionOverlap when the vacuum edges u1(0) >= u2(0) (eps too large).
WaveFan solve_two_rarefaction(const RiemannData& data, double eps,
                              const PressureLaw& law = default_pressure_law());

/// Case dispatch on sign(u_l - u_r).
WaveFan solve(const RiemannData& data, double eps,
              const PressureLaw& law = default_pressure_law());

}  // namespace vpeuler
