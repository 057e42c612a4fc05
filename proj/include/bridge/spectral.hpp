#pragma once

#include "bridge/cable.hpp"
#include "bridge/grid.hpp"

#include <Eigen/Dense>

namespace bridge {

enum class Basis { Sine, Weighted };
enum class Inner { PlainL2, WeightedL2Xi };

/// The two modal bases on (0, pi): analytic sine modes e_k = sqrt(2/pi)
/// sin(kx) and the eigenpairs (lambda_k, u_k) of the weighted problem
///   -(H0/xi^2 u')' = lambda xi u,  u(0) = u(pi) = 0,
/// sampled on the shared quadrature grid. The u_k are orthonormal in the
/// xi-weighted L2 inner product evaluated with this grid's quadrature and
/// diagonalize the H0/xi^2 stiffness form (lambda = Rayleigh-Ritz values on
/// the quadrature grid). lambda_fd keeps the raw finite-difference
/// eigenvalues for grid-convergence diagnostics.
struct SpectralBasis {
    int n_modes = 0;
    CableProfile profile;
    Grid grid;

    Eigen::VectorXd lambda;    // Ritz values on the quadrature grid
    Eigen::VectorXd lambda_fd; // raw FD eigenvalues (2nd-order in fd step)
    Eigen::MatrixXd u_samples;   // n_modes x nodes
    Eigen::MatrixXd du_samples;  // first derivatives of u_k
    Eigen::MatrixXd e_samples;   // sine modes
    Eigen::MatrixXd de_samples;  // e_k'
    Eigen::MatrixXd dde_samples; // e_k''
};

/// Analytic sine modes and derivatives at the grid nodes. The grid must
/// live on (0, pi) (the dynamics work in the scaled span).
struct SineBasis {
    Eigen::MatrixXd e, de, dde;
};
SineBasis build_sine_basis(int n_modes, const Grid& grid);

/// Discretize the weighted eigenproblem on fd_points uniform interior
/// points, extract the lowest n_modes pairs, interpolate to the quadrature
/// grid, re-orthonormalize in the xi inner product and Ritz-refine.
/// Requires fd_points >= 16 * n_modes.
SpectralBasis solve_weighted_eigenbasis(const CableProfile& profile,
                                        int n_modes, int fd_points,
                                        const Grid& grid);

/// Modal coefficients of grid samples: c_k = int samples * e_k (plain) or
/// int xi * samples * u_k (weighted).
Eigen::VectorXd project(const Eigen::VectorXd& samples,
                        const SpectralBasis& basis, Inner inner);

/// Grid samples of a modal expansion; derivative 2 is available for the
/// sine basis only.
Eigen::VectorXd reconstruct(const Eigen::VectorXd& coeffs,
                            const SpectralBasis& basis, Basis which,
                            int derivative = 0);

} // namespace bridge
