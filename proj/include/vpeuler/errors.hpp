#pragma once

#include <stdexcept>
#include <string>

namespace vpeuler {

/// Base class for failures of the numerical constructions (as opposed to
/// plain argument errors, which use std::domain_error).
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// p(rho) is not representable in double precision (rho beyond the law's
/// overflow bound).
struct PressureOverflow : NumericError {
    using NumericError::NumericError;
};

/// A shock-branch root lies beyond the representable density range; the
/// caller should switch to the log-domain solver.
struct OverflowAtVanishingEpsilon : NumericError {
    using NumericError::NumericError;
};

/// The two-shock bracketing condition rho1*(u_r) > rho_r, rho2*(u_l) > rho_l
/// fails: eps exceeds the validity threshold for this data.
struct EpsilonTooLarge : NumericError {
    using NumericError::NumericError;
};

/// The two rarefaction curves overlap at vacuum (u1(0) >= u2(0)).
struct RarefactionOverlap : NumericError {
    using NumericError::NumericError;
};

/// Pole of the small-shock middle-state formula (eps - |u_l-u_r|/2 <= 0);
/// the data belongs to the delta-shock regime.
struct DenominatorVanishing : NumericError {
    using NumericError::NumericError;
};

/// Equal densities across a jump: the mass-equation speed is undefined.
struct DegenerateJump : NumericError {
    using NumericError::NumericError;
};

/// A finite-volume cell became non-finite.
struct BlowUpDetected : NumericError {
    explicit BlowUpDetected(const std::string& what, long step_index_)
        : NumericError(what), step_index(step_index_) {}
    long step_index = -1;
};

}  // namespace vpeuler
