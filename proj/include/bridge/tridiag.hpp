#pragma once

#include <Eigen/Dense>

namespace bridge {

/// Result of a symmetric tridiagonal generalized eigensolve A v = lambda W v.
/// Eigenvalues ascending; eigenvectors are the columns of `vectors`,
/// W-orthonormal (v_i^T W v_j = delta_ij).
struct TridiagEig {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

/// Smallest `count` eigenpairs of A v = lambda W v with A symmetric
/// tridiagonal (diag, offdiag) and W = diag(weight_diag) positive.
TridiagEig sym_tridiag_generalized_eig(const Eigen::VectorXd& diag,
                                       const Eigen::VectorXd& offdiag,
                                       const Eigen::VectorXd& weight_diag,
                                       int count);

} // namespace bridge
