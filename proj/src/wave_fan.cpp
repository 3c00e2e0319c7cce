#include "vpeuler/wave_fan.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>

namespace vpeuler {

namespace {

State right_state_of(const Wave& wave) {
    return std::visit(
        [](const auto& w) -> State {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ConstantSegment>) {
                return w.state;
            } else if constexpr (std::is_same_v<T, ShockSegment>) {
                return w.jump.right;
            } else if constexpr (std::is_same_v<T, RarefactionSegment>) {
                return w.family == 1 ? w.inner : w.outer;
            } else if constexpr (std::is_same_v<T, ContactSegment>) {
                return w.right;
            } else {
                return State{};  // vacuum / delta: resolved by the caller
            }
        },
        wave);
}

State eval_segment(const WaveFan& fan, const Segment& seg, double xi) {
    return std::visit(
        [&](const auto& w) -> State {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ConstantSegment>) {
                return w.state;
            } else if constexpr (std::is_same_v<T, VacuumSegment>) {
                return State{xi, 0.0};
            } else if constexpr (std::is_same_v<T, RarefactionSegment>) {
                if (fan.model == Model::pressure) {
                    return rarefaction_fan_state(w.outer, w.family, xi,
                                                 fan.eps, *fan.law);
                }
                // shifted-flux model, family 2: u = xi - eps and rho follows
                // the exponential integral curve anchored at the outer edge
                const double e = fan.eps;
                const double rho = w.outer.rho *
                                   std::exp((xi - (w.outer.u + e)) / e);
                return State{xi - e, rho};
            } else if constexpr (std::is_same_v<T, ShockSegment>) {
                return w.jump.right;
            } else if constexpr (std::is_same_v<T, ContactSegment>) {
                return w.right;
            } else {
                static_assert(std::is_same_v<T, DeltaSegment>);
                return State{};  // handled by the caller
            }
        },
        seg.wave);
}

}  // namespace

std::string_view wave_kind(const Wave& wave) {
    return std::visit(
        [](const auto& w) -> std::string_view {
            using T = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<T, ConstantSegment>) {
                return "constant";
            } else if constexpr (std::is_same_v<T, ShockSegment>) {
                return "shock";
            } else if constexpr (std::is_same_v<T, RarefactionSegment>) {
                return "fan";
            } else if constexpr (std::is_same_v<T, VacuumSegment>) {
                return "vacuum";
            } else if constexpr (std::is_same_v<T, ContactSegment>) {
                return "contact";
            } else {
                return "delta";
            }
        },
        wave);
}

SampledPoint sample_tagged(const WaveFan& fan, double x, double t) {
    if (!(t > 0.0)) {
        throw std::domain_error("sample: t must be > 0");
    }
    if (fan.segments.empty()) {
        throw std::logic_error("sample: empty wave fan");
    }
    const double xi = x / t;
    const int n = static_cast<int>(fan.segments.size());
    for (int i = 0; i < n; ++i) {
        const Segment& seg = fan.segments[i];
        const bool zero_width = seg.xi_lo == seg.xi_hi;
        if (zero_width && xi == seg.xi_lo) {
            // exact hit on a shock/contact/delta line: state right of it
            State s = (i + 1 < n) ? eval_segment(fan, fan.segments[i + 1], xi)
                                  : right_state_of(seg.wave);
            return SampledPoint{s, wave_kind(seg.wave), i};
        }
        if (xi < seg.xi_hi) {
            return SampledPoint{eval_segment(fan, seg, xi), wave_kind(seg.wave), i};
        }
    }
    const Segment& last = fan.segments.back();
    return SampledPoint{eval_segment(fan, last, xi), wave_kind(last.wave), n - 1};
}

State sample(const WaveFan& fan, double x, double t) {
    return sample_tagged(fan, x, t).state;
}

}  // namespace vpeuler
