#include "bridge/commands.hpp"
#include "bridge/errors.hpp"
#include "bridge/forces.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

namespace bridge {

namespace {

CableParams cable_params_of(const SimulationConfig& config) {
    CableParams p;
    p.H0 = config.cable_h0;
    p.m = config.cable_m;
    p.g = config.cable_g;
    p.L = M_PI;
    p.s0 = config.cable_s0;
    p.load_mass = config.bridge_mode == "single_beam" ? config.bridge_M
                                                      : 0.5 * config.bridge_M;
    return p;
}

std::string emit(const CommandOptions& opts, CommandResult& result,
                 const std::string& name, const std::string& content) {
    std::filesystem::create_directories(opts.out_dir);
    write_file((std::filesystem::path(opts.out_dir) / name).string(), content);
    result.files.push_back(name);
    return name;
}

} // namespace

BridgeSystem make_system(const SimulationConfig& config,
                         const CommandOptions& opts) {
    config.validate();
    BridgeParams params = config.bridge_params();
    params.printed_exponents = opts.printed_exponents;
    return build_bridge_system(params, config.make_quadrature_grid(),
                               config.grid_fd_points, opts.debug_xi_one,
                               config.cable_s0, config.cable_ivp_steps);
}

ModalState make_scenario_state(Scenario scenario, double amplitude_fraction,
                               const BridgeSystem& sys) {
    ModalState state = ModalState::zero(sys.params.n_modes);
    if (scenario == Scenario::Equilibrium) return state;

    // Smallest displacement magnitude that slackens some hanger, and the
    // peak of the first sine mode, so coefficient = amplitude / peak gives
    // the requested midspan field amplitude.
    const double d_min = (-sys.law.slack_threshold_samples).minCoeff();
    const double peak = std::sqrt(2.0 / M_PI);
    const double omega1 = std::sqrt(sys.params.EI / sys.params.M);

    switch (scenario) {
    case Scenario::Longitudinal:
        state.v_y[0] = amplitude_fraction * d_min * omega1 / peak;
        break;
    case Scenario::TorsionalPerturbed: {
        const double factor = std::max(amplitude_fraction, 1.5);
        state.v_y[0] = factor * d_min * omega1 / peak;
        state.theta[0] = 1e-4;
        break;
    }
    case Scenario::Slackening: {
        const double factor = std::max(amplitude_fraction, 1.5);
        state.y[0] = -factor * d_min / peak;
        break;
    }
    case Scenario::Equilibrium:
        break;
    }
    return state;
}

double relative_drift(const std::vector<double>& series) {
    if (series.empty()) return 0.0;
    const double e0 = series.front();
    double dev = 0.0, scale = std::abs(e0);
    for (double e : series) {
        dev = std::max(dev, std::abs(e - e0));
        scale = std::max(scale, std::abs(e));
    }
    return scale > 0.0 ? dev / scale : dev;
}

CommandResult cmd_cable(const SimulationConfig& config,
                        const CommandOptions& opts) {
    config.validate();
    const Grid grid = config.make_quadrature_grid();
    const CableProfile profile =
        solve_cable(cable_params_of(config), grid, config.cable_shoot_tolerance,
                    config.cable_ivp_steps);

    CommandResult result;
    emit(opts, result, "cable.csv", cable_csv(profile));
    result.metrics.push_back({"L_c", profile.L_c});
    result.metrics.push_back({"apex_value", profile.apex_value});
    result.metrics.push_back({"shoot_residual", profile.shoot_residual});

    const SagComparisonReport sag =
        compare_sag_conventions(config.sag_span, config.sag_ratio);
    result.metrics.push_back(
        {"sag_gap_stated_constant", sag.stated_constant.gap_same_constant});
    result.metrics.push_back(
        {"sag_gap_ratio_constant", sag.ratio_constant.gap_same_constant});
    result.metrics.push_back(
        {"sag_gap_stated_matched_load", sag.stated_constant.gap_matched_load});
    result.metrics.push_back(
        {"sag_gap_ratio_matched_load", sag.ratio_constant.gap_matched_load});
    result.metrics.push_back(
        {"sag_stated_reproduces_reported_gap",
         sag.stated_constant.reproduces_reported_gap ? 1.0 : 0.0});
    result.metrics.push_back(
        {"sag_ratio_reproduces_reported_gap",
         sag.ratio_constant.reproduces_reported_gap ? 1.0 : 0.0});
    return result;
}

CommandResult cmd_eigs(const SimulationConfig& config,
                       const CommandOptions& opts) {
    const BridgeSystem sys = make_system(config, opts);
    CommandResult result;
    emit(opts, result, "basis_weighted.csv", basis_csv(sys.basis, Basis::Weighted));
    emit(opts, result, "basis_sine.csv", basis_csv(sys.basis, Basis::Sine));
    emit(opts, result, "eigenvalues.json", eigenvalues_json(sys.basis));
    result.metrics.push_back({"lambda_1", sys.basis.lambda[0]});
    result.metrics.push_back(
        {"lambda_n", sys.basis.lambda[sys.basis.n_modes - 1]});
    result.metrics.push_back({"lambda_1_fd", sys.basis.lambda_fd[0]});
    return result;
}

namespace {

CommandResult simulate_impl(const SimulationConfig& config,
                            const CommandOptions& opts, bool energy_focus) {
    const BridgeSystem sys = make_system(config, opts);
    const ModalState initial = make_scenario_state(
        parse_scenario(config.initial_scenario), config.initial_amplitude, sys);
    const Trajectory traj = run(initial, sys, config.integrator_config());

    CommandResult result;
    if (!energy_focus) {
        emit(opts, result, "trajectory.csv", trajectory_csv(traj.snapshots));
        emit(opts, result, "events.jsonl", events_jsonl(traj.events));
    }
    emit(opts, result, "energy.csv",
         energy_csv(traj.energy_times, traj.energies));

    std::vector<double> corrected, printed;
    corrected.reserve(traj.energies.size());
    for (const EnergyBreakdown& e : traj.energies) {
        corrected.push_back(e.total_corrected);
        printed.push_back(e.total_44);
    }
    result.metrics.push_back({"drift_corrected", relative_drift(corrected)});
    const double drift_44 = printed.back() - printed.front();
    result.metrics.push_back({"drift_44", drift_44});
    result.metrics.push_back({"residual_integral", traj.residual_integral});
    result.metrics.push_back(
        {"event_count", static_cast<double>(traj.events.size())});

    // Torsional energy share at the first and last audit, the diagnostic
    // for longitudinal-to-torsional energy transfer.
    auto torsion_share = [](const EnergyBreakdown& e) {
        const double tors = e.kinetic_deck_torsion + e.torsional_stiffness;
        const double scale = std::abs(e.total_corrected);
        return scale > 0.0 ? tors / scale : 0.0;
    };
    result.metrics.push_back(
        {"torsion_share_initial", torsion_share(traj.energies.front())});
    result.metrics.push_back(
        {"torsion_share_final", torsion_share(traj.energies.back())});

    double max_theta = 0.0;
    for (const ModalState& s : traj.snapshots)
        max_theta = std::max(max_theta, s.theta.cwiseAbs().maxCoeff());
    result.metrics.push_back({"max_abs_theta", max_theta});
    return result;
}

} // namespace

CommandResult cmd_simulate(const SimulationConfig& config,
                           const CommandOptions& opts) {
    return simulate_impl(config, opts, false);
}

CommandResult cmd_energy_audit(const SimulationConfig& config,
                               const CommandOptions& opts) {
    return simulate_impl(config, opts, true);
}

CommandResult cmd_picard(const SimulationConfig& config,
                         const CommandOptions& opts) {
    const BridgeSystem sys = make_system(config, opts);
    const ModalState initial = make_scenario_state(
        parse_scenario(config.initial_scenario), config.initial_amplitude, sys);
    const PicardConfig pconf = config.picard_config();
    const PicardResult picard = picard_solve(initial, sys, pconf);

    // Cross-method check: the fixed point against the direct run on the
    // same time grid.
    IntegratorConfig iconf;
    iconf.method = Method::Verlet;
    iconf.dt = pconf.inner_dt;
    iconf.t_end = pconf.horizon;
    iconf.snapshot_every = 1;
    iconf.energy_audit_every = 1 << 30;
    const Trajectory direct = run(initial, sys, iconf);
    const double mismatch =
        zt_distance(picard.trajectory, direct.snapshots, sys);

    CommandResult result;
    std::string csv = "iteration,distance,ratio\n";
    for (size_t i = 0; i < picard.report.distances.size(); ++i) {
        csv += std::to_string(i + 1) + ',' +
               format_double(picard.report.distances[i]) + ',';
        csv += (i >= 1 ? format_double(picard.report.ratios[i - 1])
                       : std::string("nan")) +
               '\n';
    }
    emit(opts, result, "picard_iterations.csv", csv);
    result.metrics.push_back(
        {"converged", picard.report.converged ? 1.0 : 0.0});
    result.metrics.push_back(
        {"iterations", static_cast<double>(picard.report.iterations)});
    result.metrics.push_back(
        {"final_distance", picard.report.distances.back()});
    result.metrics.push_back({"verlet_mismatch", mismatch});
    if (!picard.report.ratios.empty())
        result.metrics.push_back({"first_ratio", picard.report.ratios.front()});
    result.metrics.push_back(
        {"contraction_ratio", picard.report.contraction_ratio});
    return result;
}

CommandResult cmd_force_compare(const SimulationConfig& config,
                                const CommandOptions& opts) {
    const BridgeSystem sys = make_system(config, opts);

    // Representative displacement: first weighted mode scaled to the
    // smallest slack threshold.
    const double d_min = (-sys.law.slack_threshold_samples).minCoeff();
    const double amp = std::max(config.initial_amplitude, 1e-3) * d_min;
    const Eigen::VectorXd p =
        amp * sys.basis.u_samples.row(0).transpose();
    const Eigen::VectorXd dp =
        amp * sys.basis.du_samples.row(0).transpose();

    const double W = sys.law.deck_weight_per_hanger_row;
    const Eigen::VectorXd h1 =
        alt_cable_force(CableForceModel::FirstOrder, sys.profile, p, dp,
                        sys.params.AE, W, sys.params.n_modes);
    const Eigen::VectorXd h2 =
        alt_cable_force(CableForceModel::Timoshenko, sys.profile, p, dp,
                        sys.params.AE, W, sys.params.n_modes);
    const Eigen::VectorXd h3 =
        alt_cable_force(CableForceModel::BiotVonKarman, sys.profile, p, dp,
                        sys.params.AE, W, sys.params.n_modes);

    CommandResult result;
    emit(opts, result, "force_compare.csv",
         force_compare_csv(sys.basis.grid, h1, h2, h3));
    const double scale =
        std::max({h1.cwiseAbs().maxCoeff(), h2.cwiseAbs().maxCoeff(),
                  h3.cwiseAbs().maxCoeff(), 1e-300});
    const double spread = std::max((h1 - h2).cwiseAbs().maxCoeff(),
                                   std::max((h1 - h3).cwiseAbs().maxCoeff(),
                                            (h2 - h3).cwiseAbs().maxCoeff()));
    result.metrics.push_back({"max_relative_spread", spread / scale});
    return result;
}

} // namespace bridge
