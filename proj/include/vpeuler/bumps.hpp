#pragma once

#include <memory>
#include <string>
#include <vector>

namespace vpeuler {

/// Smooth compactly supported profile b(r) with analytic derivative,
/// normalized to support [-1, 1].
class BumpProfile {
public:
    virtual ~BumpProfile() = default;
    virtual const char* name() const = 0;
    virtual double eval(double r) const = 0;
    virtual double deriv(double r) const = 0;
};

/// b(r) = (1 - r^2)^4 on |r| < 1, zero outside.
class PolynomialBump final : public BumpProfile {
public:
    const char* name() const override { return "poly"; }
    double eval(double r) const override;
    double deriv(double r) const override;
};

/// b(r) = exp(-(6r)^2 / 2) truncated at |r| = 1 (six standard deviations).
class GaussianBump final : public BumpProfile {
public:
    const char* name() const override { return "gauss"; }
    double eval(double r) const override;
    double deriv(double r) const override;
};

/// Separable space-time test function
///   phi(x, t) = b((x - x0)/wx) * b((t - t0)/wt)
/// with support [x0 - wx, x0 + wx] x [t0 - wt, t0 + wt]. For use against
/// weak forms the t-support must lie inside t > 0.
class SpaceTimeBump {
public:
    SpaceTimeBump(std::shared_ptr<const BumpProfile> profile, double x0,
                  double wx, double t0, double wt);

    double operator()(double x, double t) const;
    double dx(double x, double t) const;
    double dt(double x, double t) const;

    double x_lo() const { return x0_ - wx_; }
    double x_hi() const { return x0_ + wx_; }
    double t_lo() const { return t0_ - wt_; }
    double t_hi() const { return t0_ + wt_; }
    std::string name() const;

private:
    std::shared_ptr<const BumpProfile> profile_;
    double x0_, wx_, t0_, wt_;
};

/// The fixed two-member family (polynomial and truncated Gaussian) used by
/// the verification suites, placed at the given center/half-widths.
std::vector<SpaceTimeBump> standard_bump_family(double x0, double wx,
                                                double t0, double wt);

}  // namespace vpeuler
