#include "bridge/errors.hpp"
#include "bridge/ivp.hpp"

#include <doctest.h>

#include <cmath>

using namespace bridge;

TEST_CASE("zero acceleration keeps the path constant") {
    const auto path = solve_ivp_2nd_order(
        [](double, double, double) { return 0.0; }, 0.0, 1.0, 0.0, 2.0, 64);
    REQUIRE(path.size() == 65);
    for (int i = 0; i < path.size(); ++i) {
        CHECK(path.s[i] == 1.0);
        CHECK(path.s_prime[i] == 0.0);
    }
}

TEST_CASE("harmonic oscillator hits sin(x)") {
    const auto path = solve_ivp_2nd_order(
        [](double, double s, double) { return -s; }, 0.0, 0.0, 1.0, M_PI,
        4096);
    CHECK(std::abs(path.s[path.size() - 1]) < 1e-10);
    for (int i = 0; i < path.size(); i += 512)
        CHECK(path.s[i] == doctest::Approx(std::sin(path.x_at(i))).epsilon(1e-10));
}

TEST_CASE("cable right-hand side matches the half-step reference") {
    const double M = 1.0, m = 1.0, g = 9.81, H0 = 100.0;
    const Accel2nd f = [&](double, double, double sp) {
        return g * (M + m * std::sqrt(1.0 + sp * sp)) / H0;
    };
    const auto coarse = solve_ivp_2nd_order(f, 0.0, 0.0, 0.0, M_PI, 2048);
    const auto fine = solve_ivp_2nd_order(f, 0.0, 0.0, 0.0, M_PI, 4096);
    CHECK(std::abs(coarse.s[2048] - fine.s[4096]) < 1e-9);
}

TEST_CASE("fourth-order endpoint self-convergence") {
    const Accel2nd f = [](double x, double s, double) {
        return -s + std::sin(2.0 * x);
    };
    const auto exact = solve_ivp_2nd_order(f, 0.0, 0.3, -0.1, 1.0, 1 << 16);
    const double ref = exact.s[exact.size() - 1];
    const auto a = solve_ivp_2nd_order(f, 0.0, 0.3, -0.1, 1.0, 64);
    const auto b = solve_ivp_2nd_order(f, 0.0, 0.3, -0.1, 1.0, 128);
    const double ea = std::abs(a.s[a.size() - 1] - ref);
    const double eb = std::abs(b.s[b.size() - 1] - ref);
    CHECK(ea / eb >= 12.0);
}

TEST_CASE("divergence raises a blow-up error") {
    CHECK_THROWS_AS(solve_ivp_2nd_order(
                        [](double, double s, double) { return s * s * s; },
                        0.0, 10.0, 0.0, 100.0, 128),
                    BlowupError);
}

TEST_CASE("hermite evaluation reproduces a cubic exactly") {
    // s = x^3 - 2x: s'' = 6x is linear, so the Hermite form with exact
    // accelerations is exact between samples.
    const Accel2nd f = [](double x, double, double) { return 6.0 * x; };
    const auto path = solve_ivp_2nd_order(f, 0.0, 0.0, -2.0, 1.0, 16);
    Eigen::VectorXd accel(path.size());
    for (int i = 0; i < path.size(); ++i) accel[i] = 6.0 * path.x_at(i);
    for (double x : {0.013, 0.37, 0.555, 0.99}) {
        CHECK(path.eval(x) == doctest::Approx(x * x * x - 2.0 * x).epsilon(1e-12));
        CHECK(path.eval_prime(x, accel) ==
              doctest::Approx(3.0 * x * x - 2.0).epsilon(1e-12));
    }
}

TEST_CASE("step count must be positive") {
    CHECK_THROWS_AS(solve_ivp_2nd_order(
                        [](double, double, double) { return 0.0; }, 0.0, 0.0,
                        0.0, 1.0, 0),
                    ParameterError);
}
