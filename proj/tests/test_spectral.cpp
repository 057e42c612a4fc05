#include "bridge/cable.hpp"
#include "bridge/errors.hpp"
#include "bridge/spectral.hpp"

#include <doctest.h>

#include <cmath>

using namespace bridge;

namespace {

Grid default_grid() { return make_grid(M_PI, 256, 4); }

CableProfile default_profile() {
    return solve_cable(CableParams{}, default_grid());
}

} // namespace

TEST_CASE("sine basis values and norms") {
    const Grid grid = default_grid();
    const SineBasis sine = build_sine_basis(4, grid);
    // e_1 at the node closest to pi/2
    int mid = 0;
    for (int i = 0; i < grid.size(); ++i)
        if (std::abs(grid.nodes[i] - M_PI / 2) <
            std::abs(grid.nodes[mid] - M_PI / 2))
            mid = i;
    CHECK(sine.e(0, mid) == doctest::Approx(std::sqrt(2.0 / M_PI) *
                                            std::sin(grid.nodes[mid]))
                                .epsilon(1e-14));

    const Eigen::VectorXd w = grid.weights;
    CHECK(std::abs(sine.e.row(1).dot(
              (w.array() * sine.e.row(2).transpose().array()).matrix())) <
          1e-12);
    const double h2 = sine.dde.row(2).dot(
        (w.array() * sine.dde.row(2).transpose().array()).matrix());
    CHECK(std::abs(h2 - 81.0) < 1e-10);
    const double h1 = sine.de.row(2).dot(
        (w.array() * sine.de.row(2).transpose().array()).matrix());
    CHECK(std::abs(h1 - 9.0) < 1e-10);
}

TEST_CASE("sine basis requires the scaled span") {
    CHECK_THROWS_AS(build_sine_basis(4, make_grid(1.0, 8, 4)), ParameterError);
    CHECK_THROWS_AS(build_sine_basis(0, default_grid()), ParameterError);
}

TEST_CASE("forced xi = 1 recovers the constant-coefficient spectrum") {
    const Grid grid = default_grid();
    CableParams params;
    const CableProfile profile = make_debug_xi_one_profile(params, grid);
    const SpectralBasis basis = solve_weighted_eigenbasis(profile, 16, 4096, grid);
    for (int k = 0; k < 16; ++k) {
        const double exact = params.H0 * (k + 1.0) * (k + 1.0);
        CHECK(std::abs(basis.lambda[k] - exact) <= 1e-6 * exact);
        // eigenfunctions coincide with the sine modes up to sign
        const double dev_plus =
            (basis.u_samples.row(k) - basis.e_samples.row(k)).cwiseAbs().maxCoeff();
        const double dev_minus =
            (basis.u_samples.row(k) + basis.e_samples.row(k)).cwiseAbs().maxCoeff();
        CHECK(std::min(dev_plus, dev_minus) <= 1e-6);
    }
}

TEST_CASE("generic profile: orthonormality, Rayleigh identity, bounds") {
    const Grid grid = default_grid();
    const CableProfile profile = default_profile();
    const SpectralBasis basis = solve_weighted_eigenbasis(profile, 16, 4096, grid);

    const Eigen::VectorXd wxi =
        (grid.weights.array() * profile.xi.array()).matrix();
    const Eigen::VectorXd wst =
        (grid.weights.array() * profile.params.H0 /
         profile.xi.array().square())
            .matrix();
    for (int j = 0; j < 16; ++j) {
        for (int k = 0; k <= j; ++k) {
            const double mass = basis.u_samples.row(j).dot(
                (wxi.array() * basis.u_samples.row(k).transpose().array())
                    .matrix());
            CHECK(std::abs(mass - (j == k ? 1.0 : 0.0)) <= 1e-8);
            const double stiff = basis.du_samples.row(j).dot(
                (wst.array() * basis.du_samples.row(k).transpose().array())
                    .matrix());
            const double expect = j == k ? basis.lambda[k] : 0.0;
            CHECK(std::abs(stiff - expect) <=
                  1e-6 * std::max(1.0, basis.lambda[j]));
        }
        if (j > 0) CHECK(basis.lambda[j] > basis.lambda[j - 1]);
    }
    const double xi_max = profile.xi.maxCoeff();
    CHECK(basis.lambda[0] >= profile.params.H0 / (xi_max * xi_max * xi_max));
    CHECK(basis.lambda[0] <= profile.params.H0);
}

TEST_CASE("finite-difference eigenvalues converge at second order") {
    const Grid grid = default_grid();
    const CableProfile profile = default_profile();
    const double l1 =
        solve_weighted_eigenbasis(profile, 4, 1024, grid).lambda_fd[0];
    const double l2 =
        solve_weighted_eigenbasis(profile, 4, 2048, grid).lambda_fd[0];
    const double l3 =
        solve_weighted_eigenbasis(profile, 4, 4096, grid).lambda_fd[0];
    const double order = std::log2(std::abs(l1 - l2) / std::abs(l2 - l3));
    CHECK(order >= 1.8);
    CHECK(order <= 2.2);
}

TEST_CASE("projection and reconstruction") {
    const Grid grid = default_grid();
    const CableProfile profile = default_profile();
    const SpectralBasis basis = solve_weighted_eigenbasis(profile, 8, 2048, grid);

    // sine delta
    const Eigen::VectorXd ce =
        project(basis.e_samples.row(1).transpose(), basis, Inner::PlainL2);
    for (int k = 0; k < 8; ++k)
        CHECK(std::abs(ce[k] - (k == 1 ? 1.0 : 0.0)) < 1e-12);

    // weighted delta
    const Eigen::VectorXd cu = project(basis.u_samples.row(0).transpose(),
                                       basis, Inner::WeightedL2Xi);
    for (int k = 0; k < 8; ++k)
        CHECK(std::abs(cu[k] - (k == 0 ? 1.0 : 0.0)) < 1e-8);

    // round trip on the span
    Eigen::VectorXd coeffs(8);
    coeffs << 0.3, -0.1, 0.05, 0.2, 0.0, -0.4, 0.11, 0.07;
    const Eigen::VectorXd field = reconstruct(coeffs, basis, Basis::Weighted);
    const Eigen::VectorXd back = project(field, basis, Inner::WeightedL2Xi);
    CHECK((back - coeffs).cwiseAbs().maxCoeff() <= 1e-10);

    // spectral convergence on a smooth function
    const Eigen::VectorXd smooth =
        (grid.nodes.array().sin() * (M_PI - grid.nodes.array()) *
         grid.nodes.array())
            .matrix();
    double prev_err = 1e300;
    for (int n : {4, 8, 16, 32}) {
        const SpectralBasis b = solve_weighted_eigenbasis(profile, n, 2048, grid);
        const Eigen::VectorXd rec = reconstruct(
            project(smooth, b, Inner::WeightedL2Xi), b, Basis::Weighted);
        const double err = std::sqrt(integrate(
            grid, (rec - smooth).array().square().matrix()));
        CHECK(err < prev_err);
        prev_err = err;
    }
    CHECK(prev_err < 1e-3);

    CHECK_THROWS_AS(reconstruct(coeffs, basis, Basis::Weighted, 2),
                    ParameterError);
    CHECK_THROWS_AS(project(Eigen::VectorXd::Zero(3), basis, Inner::PlainL2),
                    ParameterError);
}

TEST_CASE("resolution guard") {
    const Grid grid = default_grid();
    const CableProfile profile = default_profile();
    CHECK_THROWS_AS(solve_weighted_eigenbasis(profile, 16, 64, grid),
                    ParameterError);
}
