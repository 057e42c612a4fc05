#pragma once

#include <Eigen/Dense>
#include <functional>

namespace bridge {

/// Solution samples of a scalar second-order IVP on a uniform abscissa grid.
struct IvpPath {
    double x0 = 0.0;
    double h = 0.0; // step between samples
    Eigen::VectorXd s;
    Eigen::VectorXd s_prime;

    int size() const { return static_cast<int>(s.size()); }
    double x_at(int i) const { return x0 + i * h; }

    /// Cubic Hermite evaluation of s at x using the stored (s, s') samples.
    double eval(double x) const;
    /// Cubic Hermite evaluation of s' at x. `accel` supplies s'' at sample
    /// abscissae (the ODE right-hand side, known exactly along the path).
    double eval_prime(double x, const Eigen::VectorXd& accel) const;
};

using Accel2nd = std::function<double(double x, double s, double sp)>;

/// Classical 4th-order one-step integration of s'' = f(x, s, s') from x0 to
/// x_end with step_count uniform steps. Returns samples at the step_count+1
/// abscissae including both endpoints. Throws BlowupError on non-finite state.
IvpPath solve_ivp_2nd_order(const Accel2nd& f, double x0, double s0, double sp0,
                            double x_end, int step_count);

} // namespace bridge
