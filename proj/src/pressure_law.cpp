#include "vpeuler/pressure_law.hpp"

#include <cmath>
#include <limits>

#include "vpeuler/numerics.hpp"

namespace vpeuler {

namespace {

void check_rho(double rho, const PressureLaw& law) {
    if (rho < 0.0 || std::isnan(rho)) {
        throw std::domain_error("pressure law: rho must be >= 0");
    }
    if (rho > law.overflow_density()) {
        throw PressureOverflow("pressure law '" + std::string(law.name()) +
                               "': rho = " + std::to_string(rho) +
                               " exceeds the overflow bound " +
                               std::to_string(law.overflow_density()));
    }
}

}  // namespace

double PressureLaw::log_value(double rho) const {
    return std::log(value(rho));
}

double PressureLaw::log_derivative(double rho) const {
    return std::log(derivative(rho));
}

double PressureLaw::overflow_density() const {
    return std::numeric_limits<double>::infinity();
}

double PressureLaw::rarefaction_integral(double a, double b) const {
    if (a < 0.0 || b < 0.0) {
        throw std::domain_error("rarefaction_integral: negative density");
    }
    if (a == b) return 0.0;
    const double sign = (b >= a) ? 1.0 : -1.0;
    const double lo = std::sqrt(std::min(a, b));
    const double hi = std::sqrt(std::max(a, b));
    // x = s^2: sqrt(p'(x)/x) dx -> 2 sqrt(p'(s^2)) ds, regular at s = 0.
    const double val = numerics::adaptive_simpson(
        [this](double s) { return 2.0 * std::sqrt(derivative(s * s)); }, lo,
        hi, 1e-12);
    return sign * val;
}

double ExpPressureLaw::value(double rho) const {
    check_rho(rho, *this);
    return (rho - 1.0) * std::exp(rho) + 1.0;
}

double ExpPressureLaw::derivative(double rho) const {
    check_rho(rho, *this);
    return rho * std::exp(rho);
}

double ExpPressureLaw::log_value(double rho) const {
    if (rho < 0.0 || std::isnan(rho)) {
        throw std::domain_error("pressure law: rho must be >= 0");
    }
    if (rho == 0.0) return -std::numeric_limits<double>::infinity();
    if (rho <= 30.0) {
        return std::log((rho - 1.0) * std::exp(rho) + 1.0);
    }
    // (rho-1)e^rho + 1 = e^{rho + log(rho-1)} (1 + e^{-rho}/(rho-1))
    const double lead = rho + std::log(rho - 1.0);
    return lead + std::log1p(std::exp(-rho) / (rho - 1.0));
}

double ExpPressureLaw::log_derivative(double rho) const {
    if (!(rho > 0.0)) {
        throw std::domain_error("log_derivative: rho must be > 0");
    }
    return rho + std::log(rho);
}

double ExpPressureLaw::rarefaction_integral(double a, double b) const {
    if (a < 0.0 || b < 0.0) {
        throw std::domain_error("rarefaction_integral: negative density");
    }
    // sqrt(p'(x)/x) = e^{x/2}, antiderivative 2 e^{x/2}.
    return 2.0 * (std::exp(0.5 * b) - std::exp(0.5 * a));
}

const PressureLaw& default_pressure_law() {
    static const ExpPressureLaw law;
    return law;
}

double p_eval(double rho) { return default_pressure_law().value(rho); }

double p_prime_eval(double rho) {
    return default_pressure_law().derivative(rho);
}

double log_p(double rho) { return default_pressure_law().log_value(rho); }

double scaled_pressure(double rho, double eps, const PressureLaw& law) {
    require_positive_epsilon(eps);
    if (rho <= law.overflow_density()) {
        return eps * law.value(rho);
    }
    return std::exp(std::log(eps) + law.log_value(rho));
}

namespace {

double sound_speed(double rho, double eps, const PressureLaw& law) {
    if (!(rho > 0.0)) {
        throw std::domain_error("characteristic speeds need rho > 0");
    }
    if (eps < 0.0) {
        throw std::domain_error("characteristic speeds need eps >= 0");
    }
    return std::sqrt(eps * law.derivative(rho) * rho);
}

}  // namespace

double lambda1(double u, double rho, double eps, const PressureLaw& law) {
    return u - sound_speed(rho, eps, law);
}

double lambda2(double u, double rho, double eps, const PressureLaw& law) {
    return u + sound_speed(rho, eps, law);
}

}  // namespace vpeuler
