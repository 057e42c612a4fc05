#include "bridge/ivp.hpp"
#include "bridge/errors.hpp"

#include <cmath>

namespace bridge {

namespace {

inline int clamp_cell(double u, int n) {
    int i = static_cast<int>(std::floor(u));
    if (i < 0) i = 0;
    if (i > n - 2) i = n - 2;
    return i;
}

} // namespace

double IvpPath::eval(double x) const {
    const int n = size();
    const double u = (x - x0) / h;
    const int i = clamp_cell(u, n);
    const double t = u - i;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const double h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t);
    const double h11 = t * t * (t - 1);
    return h00 * s[i] + h10 * h * s_prime[i] + h01 * s[i + 1] +
           h11 * h * s_prime[i + 1];
}

double IvpPath::eval_prime(double x, const Eigen::VectorXd& accel) const {
    const int n = size();
    const double u = (x - x0) / h;
    const int i = clamp_cell(u, n);
    const double t = u - i;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const double h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t);
    const double h11 = t * t * (t - 1);
    return h00 * s_prime[i] + h10 * h * accel[i] + h01 * s_prime[i + 1] +
           h11 * h * accel[i + 1];
}

IvpPath solve_ivp_2nd_order(const Accel2nd& f, double x0, double s0, double sp0,
                            double x_end, int step_count) {
    if (step_count < 1)
        throw ParameterError("step_count must be >= 1");

    IvpPath path;
    path.x0 = x0;
    path.h = (x_end - x0) / step_count;
    path.s.resize(step_count + 1);
    path.s_prime.resize(step_count + 1);
    path.s[0] = s0;
    path.s_prime[0] = sp0;

    const double h = path.h;
    double s = s0, v = sp0;
    for (int i = 0; i < step_count; ++i) {
        const double x = x0 + i * h;
        const double k1s = v, k1v = f(x, s, v);
        const double k2s = v + 0.5 * h * k1v,
                     k2v = f(x + 0.5 * h, s + 0.5 * h * k1s, v + 0.5 * h * k1v);
        const double k3s = v + 0.5 * h * k2v,
                     k3v = f(x + 0.5 * h, s + 0.5 * h * k2s, v + 0.5 * h * k2v);
        const double k4s = v + h * k3v,
                     k4v = f(x + h, s + h * k3s, v + h * k3v);
        s += h / 6.0 * (k1s + 2 * k2s + 2 * k3s + k4s);
        v += h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
        if (!std::isfinite(s) || !std::isfinite(v))
            throw BlowupError("IVP state became non-finite", x + h);
        path.s[i + 1] = s;
        path.s_prime[i + 1] = v;
    }
    return path;
}

} // namespace bridge
