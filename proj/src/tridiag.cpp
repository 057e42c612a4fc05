#include "bridge/tridiag.hpp"
#include "bridge/errors.hpp"

#include <cmath>
#include <lapacke.h>
#include <vector>

namespace bridge {

TridiagEig sym_tridiag_generalized_eig(const Eigen::VectorXd& diag,
                                       const Eigen::VectorXd& offdiag,
                                       const Eigen::VectorXd& weight_diag,
                                       int count) {
    const int n = static_cast<int>(diag.size());
    if (offdiag.size() != n - 1)
        throw ParameterError("offdiag must have length n-1");
    if (weight_diag.size() != n)
        throw ParameterError("weight_diag must have length n");
    if (count < 1 || count > n)
        throw ParameterError("count must be in [1, n]");
    for (int i = 0; i < n; ++i)
        if (!(weight_diag[i] > 0.0))
            throw ParameterError("weight_diag entries must be positive");

    // Reduce A v = lambda W v to the standard problem B z = lambda z with
    // B = W^{-1/2} A W^{-1/2} (still tridiagonal) and v = W^{-1/2} z.
    Eigen::VectorXd wsqrt = weight_diag.array().sqrt();
    std::vector<double> d(n), e(n > 1 ? n - 1 : 1);
    for (int i = 0; i < n; ++i)
        d[i] = diag[i] / weight_diag[i];
    for (int i = 0; i + 1 < n; ++i)
        e[i] = offdiag[i] / (wsqrt[i] * wsqrt[i + 1]);

    std::vector<double> w(n);
    Eigen::MatrixXd z(n, count);
    std::vector<lapack_int> isuppz(2 * std::max(1, count));
    lapack_int m = 0;
    lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(), 0.0, 0.0, 1, count,
        0.0, &m, w.data(), z.data(), n, isuppz.data());
    if (info != 0 || m != count)
        throw NumericalError("tridiagonal eigensolver failed, info=" +
                             std::to_string(info));

    TridiagEig out;
    out.values = Eigen::Map<Eigen::VectorXd>(w.data(), count);
    out.vectors = z.array().colwise() / wsqrt.array();
    return out;
}

} // namespace bridge
