#include "bridge/integrate.hpp"
#include "bridge/errors.hpp"

#include <cmath>

namespace bridge {

void IntegratorConfig::validate() const {
    if (!(dt > 0.0)) throw ParameterError("integrator.dt must be positive");
    if (!(t_end > 0.0)) throw ParameterError("integrator.t_end must be positive");
    if (snapshot_every < 1 || energy_audit_every < 1)
        throw ParameterError("integrator strides must be >= 1");
}

void PicardConfig::validate() const {
    if (!(horizon > 0.0)) throw ParameterError("picard.horizon must be positive");
    if (!(convergence_tol > 0.0))
        throw ParameterError("picard.convergence_tol must be positive");
    if (max_iterations < 1)
        throw ParameterError("picard.max_iterations must be >= 1");
    if (!(inner_dt > 0.0))
        throw ParameterError("picard.inner_dt must be positive");
}

namespace {

ModalState verlet_step(const ModalState& s, const RhsFn& rhs, double dt,
                       const Accelerations* cached_acc,
                       Accelerations* acc_out) {
    Accelerations a0 = cached_acc ? *cached_acc : rhs(s);
    ModalState next = s;
    next.v_p1 = s.v_p1 + 0.5 * dt * a0.p1;
    next.v_p2 = s.v_p2 + 0.5 * dt * a0.p2;
    next.v_y = s.v_y + 0.5 * dt * a0.y;
    next.v_theta = s.v_theta + 0.5 * dt * a0.theta;
    next.p1 = s.p1 + dt * next.v_p1;
    next.p2 = s.p2 + dt * next.v_p2;
    next.y = s.y + dt * next.v_y;
    next.theta = s.theta + dt * next.v_theta;
    next.t = s.t + dt;
    Accelerations a1 = rhs(next);
    next.v_p1 += 0.5 * dt * a1.p1;
    next.v_p2 += 0.5 * dt * a1.p2;
    next.v_y += 0.5 * dt * a1.y;
    next.v_theta += 0.5 * dt * a1.theta;
    if (acc_out) *acc_out = std::move(a1);
    return next;
}

struct Deriv {
    ModalState d; // positions hold velocities, velocities hold accelerations
};

Deriv eval_deriv(const ModalState& s, const RhsFn& rhs) {
    Accelerations a = rhs(s);
    Deriv out;
    out.d.t = 1.0;
    out.d.p1 = s.v_p1;
    out.d.p2 = s.v_p2;
    out.d.y = s.v_y;
    out.d.theta = s.v_theta;
    out.d.v_p1 = std::move(a.p1);
    out.d.v_p2 = std::move(a.p2);
    out.d.v_y = std::move(a.y);
    out.d.v_theta = std::move(a.theta);
    return out;
}

ModalState axpy(const ModalState& s, double c, const ModalState& d) {
    ModalState out = s;
    out.t = s.t + c * d.t;
    out.p1 += c * d.p1;
    out.p2 += c * d.p2;
    out.y += c * d.y;
    out.theta += c * d.theta;
    out.v_p1 += c * d.v_p1;
    out.v_p2 += c * d.v_p2;
    out.v_y += c * d.v_y;
    out.v_theta += c * d.v_theta;
    return out;
}

ModalState rk4_step(const ModalState& s, const RhsFn& rhs, double dt) {
    Deriv k1 = eval_deriv(s, rhs);
    Deriv k2 = eval_deriv(axpy(s, 0.5 * dt, k1.d), rhs);
    Deriv k3 = eval_deriv(axpy(s, 0.5 * dt, k2.d), rhs);
    Deriv k4 = eval_deriv(axpy(s, dt, k3.d), rhs);
    ModalState next = axpy(s, dt / 6.0, k1.d);
    next = axpy(next, dt / 3.0, k2.d);
    next = axpy(next, dt / 3.0, k3.d);
    next = axpy(next, dt / 6.0, k4.d);
    return next;
}

} // namespace

ModalState step(const ModalState& state, const RhsFn& rhs,
                const IntegratorConfig& config) {
    config.validate();
    ModalState next = config.method == Method::Verlet
                          ? verlet_step(state, rhs, config.dt, nullptr, nullptr)
                          : rk4_step(state, rhs, config.dt);
    if (!next.finite())
        throw BlowupError("state became non-finite", next.t);
    return next;
}

RhsFn system_rhs(const BridgeSystem& sys) {
    switch (sys.params.mode_flag) {
    case ModeFlag::FullBridge:
        return [&sys](const ModalState& s) { return modal_rhs(s, sys); };
    case ModeFlag::SingleBeam:
        return [&sys](const ModalState& s) { return single_beam_rhs(s, sys); };
    case ModeFlag::LinearDecoupled: {
        const Eigen::VectorXd zero =
            Eigen::VectorXd::Zero(sys.basis.grid.size());
        return [&sys, zero](const ModalState& s) {
            return modal_rhs_forced_linear(s, sys, zero, zero, zero, zero);
        };
    }
    }
    throw ParameterError("unknown mode flag");
}

Trajectory run(const ModalState& initial, const BridgeSystem& sys,
               const IntegratorConfig& config) {
    config.validate();
    const RhsFn rhs = system_rhs(sys);
    const int nsteps = static_cast<int>(std::llround(config.t_end / config.dt));
    const double W = sys.law.deck_weight_per_hanger_row;
    const bool single = sys.params.mode_flag == ModeFlag::SingleBeam;
    const Eigen::VectorXd int_u =
        sys.basis.u_samples * sys.basis.grid.weights; // int u_k dx

    Trajectory traj;
    traj.snapshots.push_back(initial);
    traj.energy_times.push_back(initial.t);
    traj.energies.push_back(energy(initial, sys));

    // Per-node taut/slack flags for both hanger rows.
    auto elongations = [&](const ModalState& s, Eigen::VectorXd& e1,
                           Eigen::VectorXd& e2) {
        const Eigen::VectorXd p1g = reconstruct(s.p1, sys.basis, Basis::Weighted);
        const Eigen::VectorXd yg = reconstruct(s.y, sys.basis, Basis::Sine);
        if (single) {
            e1 = yg - p1g - sys.law.slack_threshold_samples;
            e2 = e1;
            return;
        }
        const Eigen::VectorXd p2g = reconstruct(s.p2, sys.basis, Basis::Weighted);
        const Eigen::VectorXd thg = reconstruct(s.theta, sys.basis, Basis::Sine);
        e1 = yg + sys.params.ell * thg - p1g - sys.law.slack_threshold_samples;
        e2 = yg - sys.params.ell * thg - p2g - sys.law.slack_threshold_samples;
    };
    Eigen::VectorXd e1, e2;
    elongations(initial, e1, e2);
    Eigen::Array<bool, Eigen::Dynamic, 1> slack1 = e1.array() < 0.0;
    Eigen::Array<bool, Eigen::Dynamic, 1> slack2 = e2.array() < 0.0;

    auto residual_rate = [&](const ModalState& s) {
        double r = int_u.dot(s.v_p1);
        if (!single) r += int_u.dot(s.v_p2);
        return W * r;
    };
    double prev_rate = residual_rate(initial);

    ModalState state = initial;
    Accelerations acc = rhs(state);
    for (int i = 1; i <= nsteps; ++i) {
        if (config.method == Method::Verlet) {
            Accelerations next_acc;
            state = verlet_step(state, rhs, config.dt, &acc, &next_acc);
            acc = std::move(next_acc);
        } else {
            state = rk4_step(state, rhs, config.dt);
        }
        if (!state.finite())
            throw BlowupError("state became non-finite", state.t);

        const double rate = residual_rate(state);
        traj.residual_integral += 0.5 * config.dt * (prev_rate + rate);
        prev_rate = rate;

        elongations(state, e1, e2);
        for (int j = 0; j < e1.size(); ++j) {
            const bool s1 = e1[j] < 0.0;
            if (s1 != slack1[j])
                traj.events.push_back({state.t, j, 1, s1});
            slack1[j] = s1;
            if (!single) {
                const bool s2 = e2[j] < 0.0;
                if (s2 != slack2[j])
                    traj.events.push_back({state.t, j, 2, s2});
                slack2[j] = s2;
            }
        }

        if (i % config.snapshot_every == 0 || i == nsteps)
            traj.snapshots.push_back(state);
        if (i % config.energy_audit_every == 0 || i == nsteps) {
            traj.energy_times.push_back(state.t);
            traj.energies.push_back(energy(state, sys));
        }
    }
    return traj;
}

double state_norm_squared(const ModalState& state, const BridgeSystem& sys) {
    double sq = 0.0;
    for (int k = 0; k < state.n_modes(); ++k) {
        const double kk = k + 1.0;
        sq += sys.basis.lambda[k] *
              (state.p1[k] * state.p1[k] + state.p2[k] * state.p2[k]);
        sq += state.v_p1[k] * state.v_p1[k] + state.v_p2[k] * state.v_p2[k];
        sq += kk * kk * kk * kk * state.y[k] * state.y[k];
        sq += state.v_y[k] * state.v_y[k];
        sq += kk * kk * state.theta[k] * state.theta[k];
        sq += state.v_theta[k] * state.v_theta[k];
    }
    return sq;
}

double zt_distance(const std::vector<ModalState>& a,
                   const std::vector<ModalState>& b, const BridgeSystem& sys) {
    if (a.size() != b.size())
        throw ParameterError("trajectories have different time grids");
    double sup = 0.0;
    for (size_t j = 0; j < a.size(); ++j) {
        ModalState diff = a[j];
        diff.p1 -= b[j].p1;
        diff.p2 -= b[j].p2;
        diff.y -= b[j].y;
        diff.theta -= b[j].theta;
        diff.v_p1 -= b[j].v_p1;
        diff.v_p2 -= b[j].v_p2;
        diff.v_y -= b[j].v_y;
        diff.v_theta -= b[j].v_theta;
        sup = std::max(sup, state_norm_squared(diff, sys));
    }
    return std::sqrt(sup);
}

std::vector<ModalState> picard_map(const std::vector<ModalState>& input,
                                   const ModalState& initial,
                                   const BridgeSystem& sys,
                                   const PicardConfig& config) {
    config.validate();
    const int nsteps =
        static_cast<int>(std::llround(config.horizon / config.inner_dt));
    if (static_cast<int>(input.size()) != nsteps + 1)
        throw ParameterError("input trajectory does not match the inner time "
                             "grid");

    // Freeze the nonlinear and nonlocal terms into forcings g1..g4.
    const int nn = sys.basis.grid.size();
    std::vector<Eigen::VectorXd> g1(nsteps + 1), g2(nsteps + 1),
        g3(nsteps + 1), g4(nsteps + 1);
    for (int j = 0; j <= nsteps; ++j) {
        const ModalState& q = input[j];
        const Eigen::VectorXd q1g = reconstruct(q.p1, sys.basis, Basis::Weighted);
        const Eigen::VectorXd q2g = reconstruct(q.p2, sys.basis, Basis::Weighted);
        const Eigen::VectorXd zg = reconstruct(q.y, sys.basis, Basis::Sine);
        const Eigen::VectorXd ag = reconstruct(q.theta, sys.basis, Basis::Sine);
        const Eigen::VectorXd phi1 =
            phi_field(sys.law, zg + sys.params.ell * ag - q1g);
        const Eigen::VectorXd phi2 =
            phi_field(sys.law, zg - sys.params.ell * ag - q2g);
        const double gamma1 = sys.nonlocal.a_vec.dot(q.p1);
        const double gamma2 = sys.nonlocal.a_vec.dot(q.p2);
        g1[j] = sys.nonlocal.prefactor * gamma1 * sys.nonlocal.b_grid + phi1;
        g2[j] = sys.nonlocal.prefactor * gamma2 * sys.nonlocal.b_grid + phi2;
        g3[j] = -(phi1 + phi2);
        g4[j] = sys.params.ell * (phi2 - phi1);
    }

    BridgeSystem lin = sys;
    lin.params.mode_flag = ModeFlag::LinearDecoupled;

    std::vector<ModalState> out;
    out.reserve(nsteps + 1);
    ModalState state = initial;
    state.t = 0.0;
    out.push_back(state);
    for (int j = 0; j < nsteps; ++j) {
        auto rhs_at = [&](int idx) {
            return [&, idx](const ModalState& s) {
                return modal_rhs_forced_linear(s, lin, g1[idx], g2[idx],
                                               g3[idx], g4[idx]);
            };
        };
        // Velocity-Verlet with the forcing evaluated at the step endpoints.
        Accelerations a0 = rhs_at(j)(state);
        ModalState next = state;
        next.v_p1 = state.v_p1 + 0.5 * config.inner_dt * a0.p1;
        next.v_p2 = state.v_p2 + 0.5 * config.inner_dt * a0.p2;
        next.v_y = state.v_y + 0.5 * config.inner_dt * a0.y;
        next.v_theta = state.v_theta + 0.5 * config.inner_dt * a0.theta;
        next.p1 = state.p1 + config.inner_dt * next.v_p1;
        next.p2 = state.p2 + config.inner_dt * next.v_p2;
        next.y = state.y + config.inner_dt * next.v_y;
        next.theta = state.theta + config.inner_dt * next.v_theta;
        next.t = state.t + config.inner_dt;
        Accelerations a1 = rhs_at(j + 1)(next);
        next.v_p1 += 0.5 * config.inner_dt * a1.p1;
        next.v_p2 += 0.5 * config.inner_dt * a1.p2;
        next.v_y += 0.5 * config.inner_dt * a1.y;
        next.v_theta += 0.5 * config.inner_dt * a1.theta;
        if (!next.finite())
            throw BlowupError("picard inner solve became non-finite", next.t);
        out.push_back(next);
        state = std::move(next);
    }
    (void)nn;
    return out;
}

PicardResult picard_solve(const ModalState& initial, const BridgeSystem& sys,
                          const PicardConfig& config) {
    config.validate();
    const int nsteps =
        static_cast<int>(std::llround(config.horizon / config.inner_dt));

    std::vector<ModalState> current(nsteps + 1);
    for (int j = 0; j <= nsteps; ++j) {
        current[j] = initial;
        current[j].t = j * config.inner_dt;
    }

    PicardResult result;
    int bad_streak = 0;
    for (int it = 1; it <= config.max_iterations; ++it) {
        std::vector<ModalState> next =
            picard_map(current, initial, sys, config);
        const double d = zt_distance(next, current, sys);
        result.report.distances.push_back(d);
        if (result.report.distances.size() >= 2) {
            const double prev =
                result.report.distances[result.report.distances.size() - 2];
            const double ratio = prev > 0.0 ? d / prev : 0.0;
            result.report.ratios.push_back(ratio);
            bad_streak = ratio >= 1.0 ? bad_streak + 1 : 0;
            if (bad_streak >= 3)
                throw NumericalError(
                    "picard iteration is not contracting; reduce the horizon");
        }
        current = std::move(next);
        result.report.iterations = it;
        if (d <= config.convergence_tol) {
            result.report.converged = true;
            break;
        }
    }
    for (size_t i = 1; i < result.report.ratios.size(); ++i)
        result.report.contraction_ratio =
            std::max(result.report.contraction_ratio, result.report.ratios[i]);
    result.trajectory = std::move(current);
    return result;
}

} // namespace bridge
