#include "bridge/spectral.hpp"
#include "bridge/errors.hpp"
#include "bridge/tridiag.hpp"

#include <cmath>

namespace bridge {

namespace {

void require_pi_domain(const Grid& grid) {
    if (std::abs(grid.domain_length - M_PI) > 1e-12)
        throw ParameterError("basis grids must live on (0, pi)");
}

// Cubic Lagrange value/derivative on a uniform grid x_j = j*h, j = 0..n-1.
struct UniformCubic {
    const Eigen::VectorXd& vals;
    double h;

    void eval(double x, double& v, double& dv) const {
        const int n = static_cast<int>(vals.size());
        int j = static_cast<int>(std::floor(x / h)) - 1;
        if (j < 0) j = 0;
        if (j > n - 4) j = n - 4;
        v = 0.0;
        dv = 0.0;
        for (int a = 0; a < 4; ++a) {
            double num = 1.0, den = 1.0, dnum = 0.0;
            const double xa = (j + a) * h;
            for (int b = 0; b < 4; ++b) {
                if (b == a) continue;
                const double xb = (j + b) * h;
                den *= xa - xb;
                dnum = dnum * (x - xb) + num;
                num *= x - xb;
            }
            v += vals[j + a] * num / den;
            dv += vals[j + a] * dnum / den;
        }
    }
};

} // namespace

SineBasis build_sine_basis(int n_modes, const Grid& grid) {
    if (n_modes < 1) throw ParameterError("n_modes must be >= 1");
    require_pi_domain(grid);

    const int nn = grid.size();
    const double amp = std::sqrt(2.0 / M_PI);
    SineBasis b;
    b.e.resize(n_modes, nn);
    b.de.resize(n_modes, nn);
    b.dde.resize(n_modes, nn);
    for (int k = 1; k <= n_modes; ++k) {
        for (int i = 0; i < nn; ++i) {
            const double x = grid.nodes[i];
            b.e(k - 1, i) = amp * std::sin(k * x);
            b.de(k - 1, i) = amp * k * std::cos(k * x);
            b.dde(k - 1, i) = -amp * k * k * std::sin(k * x);
        }
    }
    return b;
}

SpectralBasis solve_weighted_eigenbasis(const CableProfile& profile,
                                        int n_modes, int fd_points,
                                        const Grid& grid) {
    if (n_modes < 1) throw ParameterError("n_modes must be >= 1");
    if (fd_points < 16 * n_modes)
        throw ParameterError("fd_points must be >= 16 * n_modes");
    require_pi_domain(grid);

    const double H0 = profile.params.H0;
    const int N = fd_points;
    const double h = M_PI / (N + 1);

    // Symmetric 3-point discretization with the coefficient at cell faces.
    Eigen::VectorXd cface(N + 1); // face j+1/2 between x_j and x_{j+1}
    for (int j = 0; j <= N; ++j) {
        const double xi = profile.xi_at((j + 0.5) * h);
        cface[j] = H0 / (xi * xi);
    }
    Eigen::VectorXd diag(N), off(N - 1), weight(N);
    for (int j = 0; j < N; ++j) {
        diag[j] = (cface[j] + cface[j + 1]) / (h * h);
        weight[j] = profile.xi_at((j + 1) * h);
        if (j + 1 < N) off[j] = -cface[j + 1] / (h * h);
    }
    TridiagEig eig = sym_tridiag_generalized_eig(diag, off, weight, n_modes);

    SpectralBasis basis;
    basis.n_modes = n_modes;
    basis.profile = profile;
    basis.grid = grid;
    basis.lambda_fd = eig.values;

    SineBasis sine = build_sine_basis(n_modes, grid);
    basis.e_samples = std::move(sine.e);
    basis.de_samples = std::move(sine.de);
    basis.dde_samples = std::move(sine.dde);

    // Interpolate eigenvectors (with homogeneous boundary values) onto the
    // quadrature grid.
    const int nn = grid.size();
    basis.u_samples.resize(n_modes, nn);
    basis.du_samples.resize(n_modes, nn);
    Eigen::VectorXd padded(N + 2);
    for (int k = 0; k < n_modes; ++k) {
        padded[0] = 0.0;
        padded.segment(1, N) = eig.vectors.col(k);
        padded[N + 1] = 0.0;
        UniformCubic interp{padded, h};
        for (int i = 0; i < nn; ++i) {
            double v, dv;
            interp.eval(grid.nodes[i], v, dv);
            basis.u_samples(k, i) = v;
            basis.du_samples(k, i) = dv;
        }
    }

    // Re-orthonormalize in the quadrature xi inner product so downstream
    // integrals see exact orthonormality (modified Gram-Schmidt).
    const Eigen::VectorXd wxi =
        grid.weights.array() * profile.xi.array();
    for (int k = 0; k < n_modes; ++k) {
        for (int j = 0; j < k; ++j) {
            const double r =
                (basis.u_samples.row(k).transpose().array() * wxi.array() *
                 basis.u_samples.row(j).transpose().array())
                    .sum();
            basis.u_samples.row(k) -= r * basis.u_samples.row(j);
            basis.du_samples.row(k) -= r * basis.du_samples.row(j);
        }
        const double nrm = std::sqrt(
            (basis.u_samples.row(k).transpose().array().square() * wxi.array())
                .sum());
        if (!(nrm > 0.0))
            throw NumericalError("degenerate eigenvector after projection");
        basis.u_samples.row(k) /= nrm;
        basis.du_samples.row(k) /= nrm;
    }

    // Ritz refinement: diagonalize the quadrature stiffness form in the
    // orthonormalized span, so that int (H0/xi^2) u_j' u_k' = lambda_k d_jk
    // holds to quadrature precision.
    const Eigen::VectorXd wstiff =
        grid.weights.array() * H0 / profile.xi.array().square();
    Eigen::MatrixXd S(n_modes, n_modes);
    for (int j = 0; j < n_modes; ++j)
        for (int k = j; k < n_modes; ++k) {
            S(j, k) = (basis.du_samples.row(j).transpose().array() *
                       wstiff.array() *
                       basis.du_samples.row(k).transpose().array())
                          .sum();
            S(k, j) = S(j, k);
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz(S);
    if (ritz.info() != Eigen::Success)
        throw NumericalError("Ritz refinement failed");
    basis.lambda = ritz.eigenvalues();
    basis.u_samples = ritz.eigenvectors().transpose() * basis.u_samples;
    basis.du_samples = ritz.eigenvectors().transpose() * basis.du_samples;

    for (int k = 1; k < n_modes; ++k)
        if (!(basis.lambda[k] > basis.lambda[k - 1]))
            throw NumericalError("eigenvalues are not strictly increasing");

    // Sign convention u_k'(0+) > 0.
    for (int k = 0; k < n_modes; ++k)
        if (basis.u_samples(k, 0) < 0.0) {
            basis.u_samples.row(k) *= -1.0;
            basis.du_samples.row(k) *= -1.0;
        }
    return basis;
}

Eigen::VectorXd project(const Eigen::VectorXd& samples,
                        const SpectralBasis& basis, Inner inner) {
    if (samples.size() != basis.grid.nodes.size())
        throw ParameterError("sample count does not match the basis grid");
    if (inner == Inner::PlainL2)
        return basis.e_samples *
               (basis.grid.weights.array() * samples.array()).matrix();
    return basis.u_samples * (basis.grid.weights.array() *
                              basis.profile.xi.array() * samples.array())
                                 .matrix();
}

Eigen::VectorXd reconstruct(const Eigen::VectorXd& coeffs,
                            const SpectralBasis& basis, Basis which,
                            int derivative) {
    if (coeffs.size() != basis.n_modes)
        throw ParameterError("coefficient count does not match n_modes");
    if (which == Basis::Sine) {
        switch (derivative) {
        case 0: return basis.e_samples.transpose() * coeffs;
        case 1: return basis.de_samples.transpose() * coeffs;
        case 2: return basis.dde_samples.transpose() * coeffs;
        default: throw ParameterError("derivative must be 0, 1 or 2");
        }
    }
    switch (derivative) {
    case 0: return basis.u_samples.transpose() * coeffs;
    case 1: return basis.du_samples.transpose() * coeffs;
    default:
        throw ParameterError(
            "second derivatives are not stored for the weighted basis");
    }
}

} // namespace bridge
