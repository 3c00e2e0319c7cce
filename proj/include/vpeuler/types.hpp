#pragma once

#include <stdexcept>
#include <string>

namespace vpeuler {

/// A constant state (u, rho) of the one-dimensional system.
struct State {
    double u = 0.0;    ///< velocity
    double rho = 0.0;  ///< density, >= 0 (zero only inside vacuum regions)
};

/// Two-state Riemann initial data: `left` for x < 0, `right` for x > 0.
struct RiemannData {
    State left;
    State right;
};

/// Throws std::domain_error unless both densities are strictly positive.
inline void require_positive_densities(const RiemannData& data) {
    if (!(data.left.rho > 0.0) || !(data.right.rho > 0.0)) {
        throw std::domain_error("Riemann data requires rho_l > 0 and rho_r > 0");
    }
}

/// Throws std::domain_error unless eps > 0.
inline void require_positive_epsilon(double eps) {
    if (!(eps > 0.0)) {
        throw std::domain_error("perturbation strength eps must be > 0");
    }
}

}  // namespace vpeuler
