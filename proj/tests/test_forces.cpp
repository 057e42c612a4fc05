#include "bridge/cable.hpp"
#include "bridge/errors.hpp"
#include "bridge/forces.hpp"
#include "bridge/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace bridge;

namespace {

Grid default_grid() { return make_grid(M_PI, 256, 4); }

CableProfile default_profile() {
    return solve_cable(CableParams{}, default_grid());
}

} // namespace

TEST_CASE("hanger law equilibrium identity") {
    const CableProfile profile = default_profile();
    const double W = 98.1;
    const HangerLaw law = build_hanger_law(profile, 30.0, W);
    for (int i = 0; i < profile.grid.size(); ++i) {
        CHECK(law.kappa_samples[i] > 0.0);
        const double balance =
            law.kappa_samples[i] * (profile.s[i] - law.lambda_samples[i]);
        CHECK(std::abs(balance - W) <= 1e-10 * W);
        CHECK(law.slack_threshold_samples[i] < 0.0);
    }
}

TEST_CASE("no-load limit") {
    const CableProfile profile = default_profile();
    const HangerLaw law = build_hanger_law(profile, 30.0, 0.0);
    for (int i = 0; i < profile.grid.size(); i += 97) {
        CHECK(law.lambda_samples[i] ==
              doctest::Approx(profile.s[i]).epsilon(1e-14));
        CHECK(law.kappa_samples[i] ==
              doctest::Approx(30.0 / profile.s[i]).epsilon(1e-14));
    }
}

TEST_CASE("force law: equilibrium, slack branch, slopes") {
    const CableProfile profile = default_profile();
    const double W = 98.1;
    const HangerLaw law = build_hanger_law(profile, 30.0, W);
    const int node = profile.grid.size() / 2;
    const double kappa = law.kappa_samples[node];

    const HangerForce at0 = hanger_force(law, 0.0, node);
    CHECK(at0.F == doctest::Approx(W).epsilon(1e-13));
    CHECK(std::abs(at0.Phi) < 1e-10);
    CHECK(std::abs(at0.Psi) < 1e-10);

    const HangerForce slack = hanger_force(law, -2.0 * W / kappa, node);
    CHECK(slack.F == 0.0);
    CHECK(slack.Phi == doctest::Approx(-W).epsilon(1e-13));

    // taut slope d Phi / dd = kappa
    const double h = 1e-6;
    const double slope = (hanger_force(law, h, node).Phi -
                          hanger_force(law, -h, node).Phi) /
                         (2.0 * h);
    CHECK(slope == doctest::Approx(kappa).epsilon(1e-6));

    // continuity and one-sided slopes at the threshold
    const double thr = law.slack_threshold_samples[node];
    CHECK(std::abs(hanger_force(law, thr, node).F) < 1e-10);
    const double right =
        (hanger_force(law, thr + h, node).F - hanger_force(law, thr, node).F) / h;
    const double left =
        (hanger_force(law, thr, node).F - hanger_force(law, thr - h, node).F) / h;
    CHECK(right == doctest::Approx(kappa).epsilon(1e-6));
    CHECK(std::abs(left) < 1e-10);
}

TEST_CASE("Psi is the antiderivative of Phi with floor -W^2/2kappa") {
    const CableProfile profile = default_profile();
    const double W = 98.1;
    const HangerLaw law = build_hanger_law(profile, 30.0, W);
    const int node = 13;
    const double kappa = law.kappa_samples[node];
    const double h = 1e-6;
    for (double d : {-4.0, -2.5, -1.0, -0.3, 0.0, 0.4, 1.7}) {
        const double fd = (hanger_force(law, d + h, node).Psi -
                           hanger_force(law, d - h, node).Psi) /
                          (2.0 * h);
        CHECK(std::abs(fd - hanger_force(law, d, node).Phi) <= 1e-6 * W);
        CHECK(hanger_force(law, d, node).Psi >=
              -W * W / (2.0 * kappa) - 1e-12);
    }
}

TEST_CASE("field evaluators match the pointwise law") {
    const CableProfile profile = default_profile();
    const HangerLaw law = build_hanger_law(profile, 30.0, 98.1);
    Eigen::VectorXd d(profile.grid.size());
    for (int i = 0; i < d.size(); ++i)
        d[i] = 3.0 * std::sin(5.0 * profile.grid.nodes[i]);
    const Eigen::VectorXd phi = phi_field(law, d);
    const Eigen::VectorXd psi = psi_field(law, d);
    for (int i = 0; i < d.size(); i += 53) {
        const HangerForce f = hanger_force(law, d[i], i);
        CHECK(phi[i] == f.Phi);
        CHECK(psi[i] == f.Psi);
    }
}

TEST_CASE("nonlocal operator: parity, dual path, parts identity") {
    const Grid grid = default_grid();
    const CableProfile profile = default_profile();
    const SpectralBasis basis = solve_weighted_eigenbasis(profile, 8, 2048, grid);
    const NonlocalOperatorData data = build_nonlocal_operator(profile, basis, 300.0);

    // zero displacement
    CHECK((data.prefactor * (data.a_vec.dot(Eigen::VectorXd::Zero(8))) *
           data.b_grid)
              .cwiseAbs()
              .maxCoeff() == 0.0);

    // p' even about midspan, s' odd: the span integral vanishes
    const Eigen::VectorXd dp_even =
        (2.0 * grid.nodes.array() * 2.0).cos().matrix(); // (sin 2x)' = 2 cos 2x
    const Eigen::VectorXd h = nonlocal_force_direct(data, profile, dp_even);
    CHECK(h.cwiseAbs().maxCoeff() <= 1e-9);

    // rank-one form vs direct quadrature on a random modal vector
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Eigen::VectorXd p(8);
    for (int k = 0; k < 8; ++k) p[k] = unif(rng);
    const Eigen::VectorXd modal =
        data.prefactor * (data.a_vec.dot(p)) * data.b_grid;
    const Eigen::VectorXd direct = -nonlocal_force_direct(
        data, profile, reconstruct(p, basis, Basis::Weighted, 1));
    CHECK((modal - direct).cwiseAbs().maxCoeff() <=
          1e-8 * std::max(1.0, modal.cwiseAbs().maxCoeff()));

    // integration by parts: a_k = -b_k
    for (int k = 0; k < 8; ++k)
        CHECK(std::abs(data.a_vec[k] + data.b_vec[k]) <= 1e-7);

    // linearity of the rank-one form
    Eigen::VectorXd q(8);
    for (int k = 0; k < 8; ++k) q[k] = unif(rng);
    const double lhs = data.a_vec.dot(2.0 * p - 3.0 * q);
    const double rhs = 2.0 * data.a_vec.dot(p) - 3.0 * data.a_vec.dot(q);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
}

TEST_CASE("grid mismatch rejected") {
    const Grid grid = default_grid();
    const CableProfile profile = default_profile();
    const SpectralBasis basis = solve_weighted_eigenbasis(profile, 4, 1024, grid);
    const Grid other = make_grid(M_PI, 128, 4);
    CableProfile other_profile = solve_cable(CableParams{}, other);
    CHECK_THROWS_AS(build_nonlocal_operator(other_profile, basis, 300.0),
                    ParameterError);
}

TEST_CASE("alternative cable force models") {
    const Grid grid = default_grid();
    CableParams params;
    const CableProfile profile = solve_cable(params, grid);

    CHECK(parse_cable_force_model("first_order") == CableForceModel::FirstOrder);
    CHECK_THROWS_AS(parse_cable_force_model("unknown"), ParameterError);

    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(grid.size());
    for (auto model : {CableForceModel::FirstOrder, CableForceModel::Timoshenko,
                       CableForceModel::BiotVonKarman}) {
        const Eigen::VectorXd h =
            alt_cable_force(model, profile, zero, zero, 300.0, 98.1, 16);
        CHECK(h.cwiseAbs().maxCoeff() == 0.0);
    }

    // with the xi = 1 debug profile and a massless cable the first-order
    // force integrates by parts onto the Timoshenko s''-term; the
    // difference is O(eps^2)
    params.m = 0.0;
    const CableProfile flat = make_debug_xi_one_profile(params, grid);
    const Eigen::VectorXd shape =
        (grid.nodes.array().sin() * (M_PI - grid.nodes.array()) *
         grid.nodes.array())
            .matrix();
    Eigen::VectorXd dshape(grid.size());
    for (int i = 0; i < grid.size(); ++i) {
        const double x = grid.nodes[i];
        dshape[i] = std::cos(x) * (M_PI - x) * x + std::sin(x) * (M_PI - 2.0 * x);
    }
    const double W = params.load_mass * params.g;
    double prev_ratio = 0.0;
    for (double eps : {1e-3, 1e-4}) {
        const Eigen::VectorXd p = eps * shape;
        const Eigen::VectorXd dp = eps * dshape;
        const Eigen::VectorXd h1 = alt_cable_force(
            CableForceModel::FirstOrder, flat, p, dp, 300.0, W, 24);
        const Eigen::VectorXd h2 = alt_cable_force(
            CableForceModel::Timoshenko, flat, p, dp, 300.0, W, 24);
        // compare on the s''-proportional component: project onto s''
        const double s2norm =
            integrate(grid, flat.s_second.array().square().matrix());
        const double c1 =
            integrate(grid, (h1.array() * flat.s_second.array()).matrix()) /
            s2norm;
        const double c2 =
            integrate(grid, (h2.array() * flat.s_second.array()).matrix()) /
            s2norm;
        const double ratio = std::abs(c1 - c2) / std::max(std::abs(c1), 1e-300);
        if (prev_ratio > 0.0)
            CHECK(ratio <= 0.2 * prev_ratio); // shrinks at least linearly in eps
        prev_ratio = ratio;
    }
    CHECK(prev_ratio < 1e-3);
}
