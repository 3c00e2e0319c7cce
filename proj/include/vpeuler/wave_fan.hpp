#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "vpeuler/pressure_law.hpp"
#include "vpeuler/types.hpp"
#include "vpeuler/wave_curves.hpp"

namespace vpeuler {

/// Which perturbed system a fan solves: the eps-scaled pressure model or the
/// shifted-flux model (u + eps)^2 / 2.
enum class Model { pressure, flux_shift };

struct ConstantSegment {
    State state;
};

struct ShockSegment {
    ShockJump jump;
};

/// Self-similar rarefaction fan. `outer` is the data-side edge state (left
/// edge for family 1, right edge for family 2) and serves as the curve
/// anchor; `inner` is the opposite edge.
struct RarefactionSegment {
    int family = 0;
    State outer;
    State inner;
};

/// Region with rho = 0 and u = x/t.
struct VacuumSegment {};

/// Linearly degenerate family-1 wave of the shifted-flux model.
struct ContactSegment {
    double speed = 0.0;
    State left;
    State right;
};

/// Measure-valued wave: a Dirac mass in rho on x = speed * t whose weight
/// grows as weight_coefficient * t, carrying velocity carried_u.
struct DeltaSegment {
    double speed = 0.0;
    double weight_coefficient = 0.0;
    double carried_u = 0.0;
    double eps_correction = 0.0;  // the eps (rho_r - rho_l) part of the weight
};

using Wave = std::variant<ConstantSegment, ShockSegment, RarefactionSegment,
                          VacuumSegment, ContactSegment, DeltaSegment>;

/// One entry of a fan: a wave living on the similarity interval
/// [xi_lo, xi_hi] (zero-width for shocks, contacts and delta waves).
struct Segment {
    double xi_lo = 0.0;
    double xi_hi = 0.0;
    Wave wave;
};

/// Ordered self-similar solution structure of a Riemann problem. Segments
/// are contiguous, cover all of xi, and share boundary states except across
/// shocks, contacts and delta waves. Immutable after construction.
struct WaveFan {
    Model model = Model::pressure;
    double eps = 0.0;
    const PressureLaw* law = nullptr;  // non-null for Model::pressure
    RiemannData data;
    std::vector<Segment> segments;
};

/// Pointwise self-similar evaluation at xi = x/t, t > 0. At a xi exactly
/// equal to a zero-width wave's speed the state just right of the wave is
/// returned.
State sample(const WaveFan& fan, double x, double t);

struct SampledPoint {
    State state;
    std::string_view region;  // constant | shock | fan | vacuum | contact | delta
    int segment_index = -1;
};

/// sample() plus the region tag of the segment the point falls in.
SampledPoint sample_tagged(const WaveFan& fan, double x, double t);

/// Region tag of a wave.
std::string_view wave_kind(const Wave& wave);

}  // namespace vpeuler
