#include "vpeuler/bumps.hpp"

#include <cmath>
#include <stdexcept>

namespace vpeuler {

double PolynomialBump::eval(double r) const {
    if (std::fabs(r) >= 1.0) return 0.0;
    const double q = 1.0 - r * r;
    return q * q * q * q;
}

double PolynomialBump::deriv(double r) const {
    if (std::fabs(r) >= 1.0) return 0.0;
    const double q = 1.0 - r * r;
    return -8.0 * r * q * q * q;
}

double GaussianBump::eval(double r) const {
    if (std::fabs(r) >= 1.0) return 0.0;
    const double z = 6.0 * r;
    return std::exp(-0.5 * z * z);
}

double GaussianBump::deriv(double r) const {
    if (std::fabs(r) >= 1.0) return 0.0;
    const double z = 6.0 * r;
    return -36.0 * r * std::exp(-0.5 * z * z);
}

SpaceTimeBump::SpaceTimeBump(std::shared_ptr<const BumpProfile> profile,
                             double x0, double wx, double t0, double wt)
    : profile_(std::move(profile)), x0_(x0), wx_(wx), t0_(t0), wt_(wt) {
    if (!profile_ || !(wx > 0.0) || !(wt > 0.0)) {
        throw std::domain_error("SpaceTimeBump: invalid profile or widths");
    }
}

double SpaceTimeBump::operator()(double x, double t) const {
    return profile_->eval((x - x0_) / wx_) * profile_->eval((t - t0_) / wt_);
}

double SpaceTimeBump::dx(double x, double t) const {
    return profile_->deriv((x - x0_) / wx_) / wx_ *
           profile_->eval((t - t0_) / wt_);
}

double SpaceTimeBump::dt(double x, double t) const {
    return profile_->eval((x - x0_) / wx_) *
           profile_->deriv((t - t0_) / wt_) / wt_;
}

std::string SpaceTimeBump::name() const { return profile_->name(); }

std::vector<SpaceTimeBump> standard_bump_family(double x0, double wx,
                                                double t0, double wt) {
    return {
        SpaceTimeBump(std::make_shared<PolynomialBump>(), x0, wx, t0, wt),
        SpaceTimeBump(std::make_shared<GaussianBump>(), x0, wx, t0, wt),
    };
}

}  // namespace vpeuler
