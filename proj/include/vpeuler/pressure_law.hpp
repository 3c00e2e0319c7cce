#pragma once

#include "vpeuler/errors.hpp"
#include "vpeuler/types.hpp"

namespace vpeuler {

/// Pressure law p(rho) entering the scaled pressure eps * p(rho).
///
/// Any law with p(0) = 0 and both p and p' strictly increasing on (0, inf)
/// keeps every construction in this library valid; the solvers are written
/// against this interface. log_value/log_derivative allow evaluation in the
/// log domain where p itself would overflow.
class PressureLaw {
public:
    virtual ~PressureLaw() = default;

    virtual const char* name() const = 0;

    /// p(rho). Throws std::domain_error for rho < 0 and PressureOverflow
    /// beyond overflow_density().
    virtual double value(double rho) const = 0;

    /// p'(rho), same domain contract as value().
    virtual double derivative(double rho) const = 0;

    /// log p(rho); must stay finite-representable for all rho > 0.
    virtual double log_value(double rho) const;

    /// log p'(rho).
    virtual double log_derivative(double rho) const;

    /// Largest rho for which value()/derivative() are representable.
    virtual double overflow_density() const;

    /// integral of sqrt(p'(x)/x) over [a, b] (the rarefaction-curve
    /// velocity increment at eps = 1). The default integrates adaptively
    /// with the substitution x = s^2, which removes the possible
    /// singularity of p'(x)/x at x = 0.
    virtual double rarefaction_integral(double a, double b) const;
};

/// The default law: q'(x) = x^2 e^x, hence p(rho) = (rho - 1) e^rho + 1 and
/// p'(rho) = rho e^rho. All virtuals use closed forms.
class ExpPressureLaw final : public PressureLaw {
public:
    const char* name() const override { return "exp"; }
    double value(double rho) const override;
    double derivative(double rho) const override;
    double log_value(double rho) const override;
    double log_derivative(double rho) const override;
    double overflow_density() const override { return 700.0; }
    double rarefaction_integral(double a, double b) const override;
};

/// Shared instance of the default law.
const PressureLaw& default_pressure_law();

/// p(rho) of the default law.
double p_eval(double rho);

/// p'(rho) of the default law.
double p_prime_eval(double rho);

/// log p(rho) of the default law; finite for all rho > 0, asymptotically
/// rho + log(rho - 1) for large rho.
double log_p(double rho);

/// eps * p(rho), evaluated through the log domain when p(rho) itself is not
/// representable.
double scaled_pressure(double rho, double eps,
                       const PressureLaw& law = default_pressure_law());

/// Characteristic speeds u -/+ sqrt(eps p'(rho) rho). Require rho > 0
/// (vacuum edges are handled by the wave-fan code, where both speeds
/// degenerate to u).
double lambda1(double u, double rho, double eps,
               const PressureLaw& law = default_pressure_law());
double lambda2(double u, double rho, double eps,
               const PressureLaw& law = default_pressure_law());

}  // namespace vpeuler
