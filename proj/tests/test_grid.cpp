#include "bridge/errors.hpp"
#include "bridge/grid.hpp"

#include <doctest.h>

#include <cmath>

using namespace bridge;

TEST_CASE("single 2-point panel on (0, pi)") {
    const Grid g = make_grid(M_PI, 1, 2);
    REQUIRE(g.size() == 2);
    CHECK(g.nodes[0] + g.nodes[1] == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(g.weights.sum() == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(g.nodes[0] > 0.0);
    CHECK(g.nodes[1] < M_PI);
}

TEST_CASE("weights sum to the domain length for all panel orders") {
    for (int pts = 2; pts <= 5; ++pts) {
        const Grid g = make_grid(2.5, 17, pts);
        CHECK(std::abs(g.weights.sum() - 2.5) < 1e-12 * 2.5);
        for (int i = 1; i < g.size(); ++i) CHECK(g.nodes[i] > g.nodes[i - 1]);
    }
}

TEST_CASE("integrate sin on (0, pi)") {
    const Grid g = make_grid(M_PI, 64, 4);
    const double v = integrate(g, g.nodes.array().sin().matrix());
    CHECK(std::abs(v - 2.0) < 1e-12);
}

TEST_CASE("4-point Gauss is exact on degree 7") {
    const Grid g = make_grid(1.0, 1, 4);
    const double v = integrate(g, g.nodes.array().pow(7).matrix());
    CHECK(std::abs(v - 0.125) < 1e-15);
}

TEST_CASE("integrate trivia") {
    const Grid g = make_grid(M_PI, 8, 3);
    CHECK(integrate(g, Eigen::VectorXd::Zero(g.size())) == 0.0);
    CHECK(std::abs(integrate(g, Eigen::VectorXd::Ones(g.size())) - M_PI) <
          1e-12);
}

TEST_CASE("exp integral against the analytic value") {
    const Grid g = make_grid(1.0, 32, 4);
    const double v = integrate(g, g.nodes.array().exp().matrix());
    CHECK(std::abs(v - (std::exp(1.0) - 1.0)) < 1e-12);
}

TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(make_grid(1.0, 0, 4), ParameterError);
    CHECK_THROWS_AS(make_grid(1.0, 4, 1), ParameterError);
    CHECK_THROWS_AS(make_grid(1.0, 4, 6), ParameterError);
    CHECK_THROWS_AS(make_grid(-1.0, 4, 4), ParameterError);
    const Grid g = make_grid(1.0, 4, 4);
    CHECK_THROWS_AS(integrate(g, Eigen::VectorXd::Zero(g.size() + 1)),
                    ParameterError);
}
