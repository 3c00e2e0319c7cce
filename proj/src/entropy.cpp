#include "vpeuler/entropy.hpp"

#include <cmath>

#include "vpeuler/errors.hpp"
#include "vpeuler/limit_analysis.hpp"

namespace vpeuler {

namespace {

void check_rho(double rho) {
    if (rho < 0.0 || std::isnan(rho)) {
        throw std::domain_error("entropy: rho must be >= 0");
    }
    if (rho > 700.0) {
        throw PressureOverflow("entropy: e^rho overflows for rho > 700");
    }
}

}  // namespace

double eta(double u, double rho, double eps) {
    check_rho(rho);
    return 0.5 * u * u + eps * std::exp(rho);
}

double q_flux(double u, double rho, double eps) {
    check_rho(rho);
    return u * u * u / 3.0 + eps * rho * u * std::exp(rho);
}

double eps_exp_rho(double eps, double rho) {
    require_positive_epsilon(eps);
    return std::exp(std::log(eps) + rho);
}

double entropy_production_shock(const ShockJump& jump, double eps) {
    const double de = eta(jump.right.u, jump.right.rho, eps) -
                      eta(jump.left.u, jump.left.rho, eps);
    const double dq = q_flux(jump.right.u, jump.right.rho, eps) -
                      q_flux(jump.left.u, jump.left.rho, eps);
    return -jump.speed * de + dq;
}

double entropy_production_total_limit(const RiemannData& data) {
    const double ul = data.left.u, ur = data.right.u;
    return 0.25 * (ul + ur) * (ul * ul - ur * ur) +
           (ur * ur * ur - ul * ul * ul) / 3.0;
}

std::vector<EntropySweepRecord> entropy_limit_sweep(
    const RiemannData& data, const std::vector<double>& eps_list,
    const PressureLaw& law) {
    require_positive_densities(data);
    if (!(data.left.u > data.right.u)) {
        throw std::domain_error("entropy_limit_sweep: requires u_l > u_r");
    }
    const double limit = entropy_production_total_limit(data);
    const State& l = data.left;
    const State& r = data.right;

    std::vector<EntropySweepRecord> out;
    out.reserve(eps_list.size());
    for (double eps : eps_list) {
        const LogDomainStar star = solve_two_shock_log(data, eps, law);
        const double ee_star = eps_exp_rho(eps, star.rho_star);
        const double eta_star = 0.5 * star.u_star * star.u_star + ee_star;
        const double q_star =
            star.u_star * star.u_star * star.u_star / 3.0 +
            star.rho_star * star.u_star * ee_star;

        EntropySweepRecord rec;
        rec.eps = eps;
        rec.production1 = -star.s1 * (eta_star - eta(l.u, l.rho, eps)) +
                          (q_star - q_flux(l.u, l.rho, eps));
        rec.production2 = -star.s2 * (eta(r.u, r.rho, eps) - eta_star) +
                          (q_flux(r.u, r.rho, eps) - q_star);
        rec.total = rec.production1 + rec.production2;
        rec.cross_term = ee_star * (star.s2 - star.s1);
        rec.err_total = std::fabs(rec.total - limit);
        out.push_back(rec);
    }
    return out;
}

}  // namespace vpeuler
