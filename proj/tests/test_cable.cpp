#include "bridge/cable.hpp"
#include "bridge/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bridge;

namespace {

Grid default_grid() { return make_grid(M_PI, 256, 4); }

} // namespace

TEST_CASE("massless cable is the parabola") {
    CableParams p;
    p.m = 0.0;
    p.load_mass = 10.0;
    const Grid grid = default_grid();
    const CableProfile profile = solve_cable(p, grid);
    for (int i = 0; i < grid.size(); ++i)
        CHECK(std::abs(profile.s[i] - parabola_reference(p, grid.nodes[i])) <=
              1e-10 * p.s0);
}

TEST_CASE("unloaded cable is the catenary") {
    CableParams p;
    p.m = 2.0;
    p.load_mass = 0.0;
    const Grid grid = default_grid();
    const CableProfile profile = solve_cable(p, grid);
    for (int i = 0; i < grid.size(); ++i)
        CHECK(std::abs(profile.s[i] - catenary_reference(p, grid.nodes[i])) <=
              1e-8 * p.s0);
}

TEST_CASE("generic profile: residual, symmetry, apex self-convergence") {
    CableParams p; // defaults: m=1, load_mass=10, H0=500
    const Grid grid = default_grid();
    const CableProfile profile = solve_cable(p, grid, 1e-9, 4096);
    for (int i = 0; i < grid.size(); ++i) {
        const double load = (p.load_mass + p.m * profile.xi[i]) * p.g;
        CHECK(std::abs(p.H0 * profile.s_second[i] - load) <= 1e-8 * load);
        CHECK(profile.xi[i] >= 1.0);
        CHECK(profile.s_second[i] > 0.0);
        // grid is symmetric about pi/2, so the mirror node exists
        const int j = grid.size() - 1 - i;
        CHECK(std::abs(profile.s[i] - profile.s[j]) <= 1e-9 * p.s0);
    }
    CHECK(profile.L_c >= p.L);
    const CableProfile fine = solve_cable(p, grid, 1e-9, 8192);
    CHECK(std::abs(profile.apex_value - fine.apex_value) <= 1e-9);
}

TEST_CASE("randomized triples keep symmetry and the ODE residual") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const Grid grid = default_grid();
    for (int trial = 0; trial < 10; ++trial) {
        CableParams p;
        p.m = 0.2 + 3.0 * unif(rng);
        p.load_mass = 1.0 + 20.0 * unif(rng);
        p.H0 = 200.0 + 1500.0 * unif(rng);
        const CableProfile profile = solve_cable(p, grid);
        for (int i = 0; i < grid.size(); ++i) {
            const int j = grid.size() - 1 - i;
            CHECK(std::abs(profile.s[i] - profile.s[j]) <= 1e-9 * p.s0);
            const double load = (p.load_mass + p.m * profile.xi[i]) * p.g;
            CHECK(std::abs(p.H0 * profile.s_second[i] - load) <= 1e-8 * load);
        }
    }
}

TEST_CASE("closed-form evaluators") {
    CableParams para;
    para.m = 0.0;
    para.load_mass = 10.0;
    CHECK(parabola_reference(para, 0.0) == doctest::Approx(para.s0));
    CHECK(parabola_reference(para, para.L) == doctest::Approx(para.s0));
    CHECK(parabola_reference(para, para.L / 2) ==
          doctest::Approx(para.s0 -
                          para.load_mass * para.g * para.L * para.L /
                              (8.0 * para.H0)));

    CableParams cat;
    cat.m = 1.0;
    cat.load_mass = 0.0;
    CHECK(catenary_reference(cat, 0.0) == doctest::Approx(cat.s0).epsilon(1e-12));
    CHECK(catenary_reference(cat, cat.L) == doctest::Approx(cat.s0).epsilon(1e-12));
    // apex curvature from the ODE at zero slope
    const double h = 1e-4;
    const double mid = cat.L / 2;
    const double dd = (catenary_reference(cat, mid + h) -
                       2.0 * catenary_reference(cat, mid) +
                       catenary_reference(cat, mid - h)) /
                      (h * h);
    CHECK(dd == doctest::Approx(cat.m * cat.g / cat.H0).epsilon(1e-6));

    CHECK_THROWS_AS(parabola_reference(cat, 1.0), ParameterError);
    CHECK_THROWS_AS(catenary_reference(para, 1.0), ParameterError);
}

TEST_CASE("tension at rest") {
    CableParams p;
    p.m = 0.0;
    p.load_mass = 10.0;
    const CableProfile profile = solve_cable(p, default_grid());
    // xi is linearly interpolated between nodes straddling the apex, so
    // allow the quadratic interpolation residue
    CHECK(cable_tension_at_rest(profile, p.L / 2) ==
          doctest::Approx(p.H0).epsilon(1e-5));
    for (double x : {0.3, 1.0, 2.0, 3.0})
        CHECK(cable_tension_at_rest(profile, x) >= p.H0 * (1.0 - 1e-12));
    const double slope0 = p.load_mass * p.g * p.L / (2.0 * p.H0);
    CHECK(cable_tension_at_rest(profile, 0.0) ==
          doctest::Approx(p.H0 * std::sqrt(1.0 + slope0 * slope0))
              .epsilon(1e-6));
    CHECK_THROWS_AS(cable_tension_at_rest(profile, -0.1), ParameterError);
    CHECK_THROWS_AS(cable_tension_at_rest(profile, p.L + 0.1), ParameterError);
}

TEST_CASE("sag conventions: stated constant reproduces the ~6m gap") {
    const SagComparisonReport rep = compare_sag_conventions(1000.0, 1.0 / 12.0);
    CHECK(rep.stated_constant.constant ==
          doctest::Approx(2.0 / 3000.0).epsilon(1e-12));
    CHECK(rep.ratio_constant.constant ==
          doctest::Approx(1.0 / 3000.0).epsilon(1e-12));
    CHECK(rep.stated_constant.gap_same_constant >= 4.8);
    CHECK(rep.stated_constant.gap_same_constant <= 7.2);
    CHECK(rep.stated_constant.reproduces_reported_gap);
    CHECK_FALSE(rep.ratio_constant.reproduces_reported_gap);
}

TEST_CASE("sag gap vanishes with the sag ratio and scales with L") {
    const SagComparisonReport tiny = compare_sag_conventions(1000.0, 1e-4);
    CHECK(std::abs(tiny.ratio_constant.gap_same_constant) < 1e-3);

    const SagComparisonReport big = compare_sag_conventions(1000.0, 1.0 / 12.0);
    const SagComparisonReport scaled = compare_sag_conventions(M_PI, 1.0 / 12.0);
    CHECK(scaled.stated_constant.gap_same_constant / M_PI ==
          doctest::Approx(big.stated_constant.gap_same_constant / 1000.0)
              .epsilon(1e-10));
    CHECK(scaled.stated_constant.gap_same_constant / M_PI ==
          doctest::Approx(6e-3).epsilon(0.2));
}

TEST_CASE("cable length approaches the span as sag vanishes") {
    CableParams p;
    const Grid grid = default_grid();
    double prev = solve_cable(p, grid).L_c;
    for (double H0 : {2000.0, 8000.0, 32000.0}) {
        p.H0 = H0;
        const double lc = solve_cable(p, grid).L_c;
        CHECK(lc >= p.L);
        CHECK(lc < prev);
        prev = lc;
    }
    CHECK(prev - p.L < 1e-3);
}

TEST_CASE("determinism: identical inputs give identical profiles") {
    CableParams p;
    const Grid grid = default_grid();
    const CableProfile a = solve_cable(p, grid);
    const CableProfile b = solve_cable(p, grid);
    CHECK((a.s - b.s).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.L_c == b.L_c);
}

TEST_CASE("invalid parameters rejected") {
    CableParams p;
    p.H0 = 0.0;
    CHECK_THROWS_AS(solve_cable(p, default_grid()), ParameterError);
    CableParams q;
    q.m = 0.0;
    q.load_mass = 0.0;
    CHECK_THROWS_AS(solve_cable(q, default_grid()), ParameterError);
}
