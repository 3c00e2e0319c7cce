#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "vpeuler/errors.hpp"
#include "vpeuler/limit_analysis.hpp"

using namespace vpeuler;

namespace {
// eps p(rho*) for (1,1,-1,1) from the log-domain bisection oracle
constexpr double kEpsP1e3 = 0.74043873318520337;   // eps = 1e-3
constexpr double kEpsP1e12 = 0.54368548691283369;  // eps = 1e-12
}  // namespace

TEST_CASE("predicted limits per data case") {
    const LimitSolution d =
        predicted_limit(RiemannData{State{1, 1}, State{-1, 1}});
    CHECK(d.kind == LimitKind::delta_shock);
    CHECK(d.delta.speed == 0.0);
    CHECK(d.delta.weight_coefficient == 2.0);
    CHECK(d.delta.carried_u == 0.0);

    const LimitSolution c =
        predicted_limit(RiemannData{State{0, 5}, State{0, 3}});
    CHECK(c.kind == LimitKind::contact);
    CHECK(c.delta.weight_coefficient == 0.0);
    CHECK(c.delta.speed == 0.0);

    const LimitSolution v =
        predicted_limit(RiemannData{State{-1, 1}, State{1, 1}});
    CHECK(v.kind == LimitKind::vacuum);
    CHECK(v.delta.weight_coefficient == 0.0);

    // positive weight iff u_l > u_r
    CHECK(predicted_limit(RiemannData{State{2, 1}, State{0, 2}})
              .delta.weight_coefficient > 0.0);
}

TEST_CASE("log-domain star state") {
    const RiemannData data{State{1, 1}, State{-1, 1}};

    // dual-path consistency at a moderate eps
    const LogDomainStar s3 = solve_two_shock_log(data, 1e-3);
    CHECK(s3.eps_p_star == doctest::Approx(kEpsP1e3).epsilon(1e-13));
    auto [star, fan] = solve_two_shock(data, 1e-3);
    CHECK(std::fabs(s3.eps_p_star - scaled_pressure(star.rho_star, 1e-3)) <
          1e-8);
    CHECK(std::fabs(s3.u_star - star.u_star) < 1e-12);
    CHECK(std::fabs(std::exp(s3.log_rho_star) - star.rho_star) < 1e-8);

    // deep eps where only the log path is meaningful
    const LogDomainStar s12 = solve_two_shock_log(data, 1e-12);
    CHECK(s12.u_star == 0.0);
    CHECK(s12.eps_p_star == doctest::Approx(kEpsP1e12).epsilon(1e-12));
    // the limiting value 0.5 is approached only logarithmically; percent
    // closeness needs extremely small eps
    const LogDomainStar s50 = solve_two_shock_log(data, 1e-50);
    CHECK(s50.eps_p_star > 0.49);
    CHECK(s50.eps_p_star < 0.51);

    // rho* grows as eps falls
    CHECK(s12.rho_star > s3.rho_star);
    CHECK(s50.rho_star > s12.rho_star);

    CHECK(log_domain_rho_star(data, 1e-12) ==
          doctest::Approx(s12.log_rho_star));
}

TEST_CASE("epsilon sweep: symmetric two-shock data") {
    const RiemannData data{State{1, 1}, State{-1, 1}};
    const std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    const auto recs = epsilon_sweep(data, eps);
    REQUIRE(recs.size() == 6);

    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].eps == eps[i]);
        CHECK(recs[i].u_star == 0.0);  // symmetry, every eps
        CHECK(recs[i].err_u == 0.0);
        CHECK(std::isfinite(recs[i].log_rho_star));
        CHECK(recs[i].s1 == doctest::Approx(-recs[i].s2).epsilon(1e-12));
        if (i > 0) {
            CHECK(recs[i].err_l < recs[i - 1].err_l);
            CHECK(recs[i].err_w < recs[i - 1].err_w);
            CHECK(std::fabs(recs[i].s1) < std::fabs(recs[i - 1].s1));
            CHECK(recs[i].log_rho_star > recs[i - 1].log_rho_star);
            // the shocks close in on each other
            CHECK(recs[i].s2 - recs[i].s1 < recs[i - 1].s2 - recs[i - 1].s1);
        }
    }
    // eps p(rho*) -> (u_l - u_r)^2 / 8 = 0.5 from above
    CHECK(recs.back().eps_p_rho_star > 0.5);
    CHECK(recs.back().eps_p_rho_star < 0.61);

    CHECK_THROWS_AS(epsilon_sweep(data, {1e-2, 1e-1}), std::domain_error);
    CHECK_THROWS_AS(
        epsilon_sweep(RiemannData{State{0, 1}, State{1, 1}}, {1e-2}),
        std::domain_error);
}

TEST_CASE("epsilon sweep: error columns reach the limits at tiny eps") {
    const RiemannData data{State{2, 1}, State{0, 2}};
    // w0 = (u_l - u_r)(rho_l + rho_r)/2 = 3, c = 1
    const auto recs = epsilon_sweep(
        data, {1e-1, 1e-2, 1e-5, 1e-10, 1e-50, 1e-150, 1e-250});
    const double c = 1.0;  // (u_l + u_r) / 2
    for (std::size_t i = 1; i < recs.size(); ++i) {
        CHECK(recs[i].err_u < recs[i - 1].err_u);
        CHECK(recs[i].err_l < recs[i - 1].err_l);
        CHECK(recs[i].err_w < recs[i - 1].err_w);
        // both shock speeds close in on the delta line
        CHECK(std::fabs(recs[i].s1 - c) < std::fabs(recs[i - 1].s1 - c));
        CHECK(std::fabs(recs[i].s2 - c) < std::fabs(recs[i - 1].s2 - c));
    }
    CHECK(recs.back().err_u < 0.01 * 1.0);
    CHECK(recs.back().err_l < 0.01 * 0.5);
    CHECK(recs.back().err_w < 0.01 * 3.0);
    CHECK(recs.back().d_coeff == doctest::Approx(3.0).epsilon(0.01));
}

TEST_CASE("d_coeff equals the explicit per-t weight expression") {
    // rho* (s2 - s1) must coincide with
    //   [(u_r-u_l)/2 + eps(p*-p_r)/(u*-u_r) - eps(p*-p_l)/(u*-u_l)] rho*
    // since the speeds come from the velocity jump relation
    const RiemannData data{State{2, 1}, State{0, 2}};
    for (double eps : {1e-1, 1e-3, 1e-8, 1e-40}) {
        const LogDomainStar s = solve_two_shock_log(data, eps);
        const auto rec = epsilon_sweep(data, {eps}).front();
        const double ep_l = scaled_pressure(data.left.rho, eps);
        const double ep_r = scaled_pressure(data.right.rho, eps);
        const double literal =
            ((data.right.u - data.left.u) / 2.0 +
             (s.eps_p_star - ep_r) / (s.u_star - data.right.u) -
             (s.eps_p_star - ep_l) / (s.u_star - data.left.u)) *
            s.rho_star;
        CHECK(rec.d_coeff ==
              doctest::Approx(literal).epsilon(1e-9));
    }
}

TEST_CASE("indicator pairing: synthetic concentration") {
    IndicatorFamilies fam;
    fam.a = [](double e, double) { return e; };
    fam.b = [](double e, double) { return e; };
    fam.d = [](double, double t) { return t; };
    fam.c = [](double) { return 0.0; };
    fam.d_limit = [](double t) { return t; };
    const auto phi = standard_bump_family(0.0, 1.5, 0.6, 0.4)[1];

    // support away from the concentration line pairs to zero on both sides
    const auto off = standard_bump_family(5.0, 1.0, 0.6, 0.4)[0];
    const auto zero = indicator_delta_pairing(fam, off, {0.1, 0.05});
    CHECK(zero[0] <= 1e-12);
    CHECK(zero[1] <= 1e-12);

    const std::vector<double> eps{0.1, 0.05, 0.025, 0.0125};
    const auto errs = indicator_delta_pairing(fam, phi, eps);
    REQUIRE(errs.size() == 4);
    for (std::size_t i = 1; i < errs.size(); ++i) CHECK(errs[i] < errs[i - 1]);
    // empirical O(eps^2) rate: halving eps divides the error by about 4
    CHECK(errs[1] / errs[0] < 0.3);
    CHECK(errs[3] / errs[2] < 0.3);

    // degenerate width must be rejected
    IndicatorFamilies degen = fam;
    degen.a = [](double, double) { return 0.0; };
    degen.b = [](double, double) { return 0.0; };
    CHECK_THROWS_AS(indicator_delta_pairing(degen, phi, {0.1}),
                    std::domain_error);
}

TEST_CASE("indicator pairing: solver middle branch concentrates correctly") {
    const RiemannData data{State{1, 1}, State{-1, 1}};
    const auto phi = standard_bump_family(0.0, 1.0, 0.6, 0.4)[1];
    const auto fam = two_shock_indicator_families(data);
    const std::vector<double> eps{1e-1, 1e-4, 1e-16, 1e-64};
    const auto errs = indicator_delta_pairing(fam, phi, eps);
    for (std::size_t i = 1; i < errs.size(); ++i) CHECK(errs[i] < errs[i - 1]);

    // relative to the limit pairing <w0 t delta, phi>
    const double limit_pairing = oracles::integrate(
        [&](double t) { return 2.0 * t * phi(0.0, t); }, 0.2, 1.0, 1e-12);
    CHECK(errs.back() <= 0.02 * limit_pairing);
}

TEST_CASE("weak measure error shrinks along the sweep") {
    const RiemannData data{State{1, 1}, State{-1, 1}};
    const auto phi = standard_bump_family(0.0, 1.5, 0.6, 0.4)[1];
    const double e1 = weak_measure_error(data, 1e-1, phi);
    const double e2 = weak_measure_error(data, 1e-3, phi);
    const double e3 = weak_measure_error(data, 1e-8, phi);
    CHECK(e2 < e1);
    CHECK(e3 < e2);
    CHECK(weak_measure_error(data, 0.0, phi) == 0.0);

    // support strictly right of every wave sees only the constant state
    const auto far = standard_bump_family(3.0, 0.5, 0.6, 0.3)[0];
    CHECK(weak_measure_error(data, 1e-3, far) <= 1e-10);
}
