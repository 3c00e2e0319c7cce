#include <cmath>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "vpeuler/entropy.hpp"
#include "vpeuler/errors.hpp"
#include "vpeuler/pressure_law.hpp"

using namespace vpeuler;

TEST_CASE("entropy pair values") {
    CHECK(eta(0, 0, 1.0) == 1.0);
    CHECK(q_flux(1, 0, 0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(eta(2, 1, 0.5) ==
          doctest::Approx(2.0 + 0.5 * std::exp(1.0)).epsilon(1e-15));
    CHECK_THROWS_AS(eta(0, -1, 0.1), std::domain_error);
    CHECK_THROWS_AS(q_flux(0, 701, 0.1), PressureOverflow);
    // e^rho equals p'(rho)/rho (cross-check identity)
    for (double rho : {0.5, 1.0, 3.0, 10.0}) {
        CHECK(std::exp(rho) ==
              doctest::Approx(p_prime_eval(rho) / rho).epsilon(1e-14));
    }
    CHECK(eps_exp_rho(1e-3, 2.0) ==
          doctest::Approx(1e-3 * std::exp(2.0)).epsilon(1e-13));
}

TEST_CASE("compatibility: Deta . Df = Dq by finite differences") {
    const double h = 1e-6;
    auto check_point = [&](double u, double rho, double eps) {
        auto eta_u = [&](double v) { return eta(v, rho, eps); };
        auto eta_r = [&](double r) { return eta(u, r, eps); };
        auto q_u = [&](double v) { return q_flux(v, rho, eps); };
        auto q_r = [&](double r) { return q_flux(u, r, eps); };
        const double de_du = oracles::central_diff(eta_u, u, h);
        const double de_dr = oracles::central_diff(eta_r, rho, h);
        const double dq_du = oracles::central_diff(q_u, u, h);
        const double dq_dr = oracles::central_diff(q_r, rho, h);
        // flux Jacobian rows: (u, eps p'(rho)) and (rho, u)
        const double r1 = de_du * u + de_dr * rho - dq_du;
        const double r2 =
            de_du * eps * p_prime_eval(rho) + de_dr * u - dq_dr;
        CHECK(std::fabs(r1) <= 1e-8);
        CHECK(std::fabs(r2) <= 1e-8);
    };
    check_point(0.7, 1.3, 0.1);
    // eps <= 0.1 keeps the finite-difference cancellation noise below the
    // 1e-8 bound
    for (double u : {-2.0, 0.4, 1.7}) {
        for (double rho : {0.3, 1.0, 2.5}) {
            for (double eps : {0.1, 0.01}) check_point(u, rho, eps);
        }
    }
}

TEST_CASE("eta is strictly convex: finite-difference Hessian positive") {
    const double h = 1e-5;
    for (double eps : {1.0, 0.1, 0.01}) {
        for (double u = -3.0; u <= 3.0; u += 1.5) {
            for (double rho = 0.1; rho <= 5.0; rho += 0.7) {
                const double huu =
                    (eta(u + h, rho, eps) - 2 * eta(u, rho, eps) +
                     eta(u - h, rho, eps)) /
                    (h * h);
                const double hrr =
                    (eta(u, rho + h, eps) - 2 * eta(u, rho, eps) +
                     eta(u, rho - h, eps)) /
                    (h * h);
                const double hur =
                    (eta(u + h, rho + h, eps) - eta(u + h, rho - h, eps) -
                     eta(u - h, rho + h, eps) + eta(u - h, rho - h, eps)) /
                    (4 * h * h);
                // 2x2 eigenvalues positive iff trace > 0 and det > 0
                CHECK(huu + hrr > 0.0);
                CHECK(huu * hrr - hur * hur > 0.0);
            }
        }
    }
}

TEST_CASE("entropy production signs") {
    const double eps = 0.01;
    const State left{1, 1};
    const State zero_r{1, 1};
    CHECK(entropy_production_shock(ShockJump{left, zero_r, 0.3, 1}, eps) ==
          0.0);

    const RiemannData data{State{1, 1}, State{-1, 1}};
    auto [star, fan] = solve_two_shock(data, eps);
    const auto& j1 = std::get<ShockSegment>(fan.segments[1].wave).jump;
    const auto& j2 = std::get<ShockSegment>(fan.segments[3].wave).jump;
    CHECK(entropy_production_shock(j1, eps) < 0.0);
    CHECK(entropy_production_shock(j2, eps) < 0.0);
    // reversed jumps produce entropy of the opposite sign
    const ShockJump r1{j1.right, j1.left, j1.speed, 1};
    CHECK(entropy_production_shock(r1, eps) > 0.0);
}

TEST_CASE("every solver-produced shock dissipates entropy (randomized)") {
    std::mt19937_64 rng(20250810);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int checked = 0;
    for (int k = 0; k < 100; ++k) {
        const double ul = -1.5 + 3.0 * U(rng);
        const RiemannData data{State{ul, 0.3 + 3.0 * U(rng)},
                               State{ul - 0.2 - 2.0 * U(rng), 0.3 + 3.0 * U(rng)}};
        double eps = 0.02 + 0.15 * U(rng);
        for (int tries = 0; tries < 8; ++tries) {
            try {
                auto [star, fan] = solve_two_shock(data, eps);
                for (int seg : {1, 3}) {
                    const auto& j =
                        std::get<ShockSegment>(fan.segments[seg].wave).jump;
                    CHECK(entropy_production_shock(j, eps) <= 1e-12);
                }
                ++checked;
                break;
            } catch (const EpsilonTooLarge&) {
                eps *= 0.25;
            }
        }
    }
    CHECK(checked == 100);
}

TEST_CASE("limit of the total production") {
    CHECK(entropy_production_total_limit(RiemannData{State{1, 1}, State{-1, 1}}) ==
          doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
    CHECK(entropy_production_total_limit(
              RiemannData{State{0.8, 1}, State{0.8, 2}}) == 0.0);
    CHECK(entropy_production_total_limit(RiemannData{State{2, 1}, State{0, 1}}) ==
          doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
    // identity -(u_l - u_r)^3 / 12 for random velocities
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    for (int k = 0; k < 50; ++k) {
        const double a = U(rng), b = U(rng);
        const RiemannData d{State{a, 1}, State{b, 1}};
        const double cube = -(a - b) * (a - b) * (a - b) / 12.0;
        CHECK(entropy_production_total_limit(d) ==
              doctest::Approx(cube).epsilon(1e-12));
    }
}

TEST_CASE("entropy sweep converges to the limit production") {
    const RiemannData data{State{1, 1}, State{-1, 1}};
    const auto recs = entropy_limit_sweep(
        data, {1e-1, 1e-2, 1e-4, 1e-8, 1e-30, 1e-120, 1e-240});
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].production1 < 0.0);
        CHECK(recs[i].production2 < 0.0);
        CHECK(recs[i].total ==
              doctest::Approx(recs[i].production1 + recs[i].production2));
        if (i > 0) {
            CHECK(std::fabs(recs[i].cross_term) <
                  std::fabs(recs[i - 1].cross_term));
            CHECK(recs[i].err_total < recs[i - 1].err_total);
        }
    }
    CHECK(recs.back().total ==
          doctest::Approx(-2.0 / 3.0).epsilon(0.01));
    CHECK_THROWS_AS(
        entropy_limit_sweep(RiemannData{State{0, 1}, State{0, 1}}, {0.1}),
        std::domain_error);
}

TEST_CASE("equal velocities: productions vanish with eps") {
    // single 2-shock of the equal-u solution dissipates less and less
    const RiemannData data{State{0, 2}, State{0, 1}};
    double prev = -1e18;
    for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
        auto [star, fan] = solve_equal_u(data, eps);
        const auto& j2 = std::get<ShockSegment>(fan.segments[3].wave).jump;
        const double prod = entropy_production_shock(j2, eps);
        CHECK(prod <= 1e-12);
        CHECK(prod > prev);  // increasing toward zero
        prev = prod;
    }
    CHECK(std::fabs(prev) < 1e-4);
}
