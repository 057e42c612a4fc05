#pragma once

#include "bridge/dynamics.hpp"
#include "bridge/integrate.hpp"

#include <string>

namespace bridge {

enum class Scenario { Equilibrium, Longitudinal, TorsionalPerturbed, Slackening };

Scenario parse_scenario(const std::string& tag);
std::string scenario_tag(Scenario scenario);

/// Full run configuration, parsed from the flat dotted-key format:
///   # comment
///   bridge.n_modes = 16
/// Unknown keys are rejected; every key has a default.
struct SimulationConfig {
    // cable.*
    double cable_h0 = 500.0;
    double cable_m = 1.0;
    double cable_g = 9.81;
    double cable_s0 = 3.0;
    double cable_shoot_tolerance = 1e-9;
    int cable_ivp_steps = 4096;

    // bridge.*
    double bridge_M = 20.0;
    double bridge_ell = 0.2;
    double bridge_EI = 100.0;
    double bridge_GK = 50.0;
    double bridge_AE = 300.0;
    double bridge_kappa0 = 30.0;
    int bridge_n_modes = 16;
    std::string bridge_mode = "full_bridge"; // full_bridge | single_beam

    // grid.*
    int grid_panel_count = 256;
    int grid_points_per_panel = 4;
    int grid_fd_points = 4096;

    // integrator.*
    std::string integrator_method = "verlet"; // verlet | rk4
    double integrator_dt = 1e-3;
    double integrator_t_end = 10.0;
    int integrator_snapshot_every = 10;
    int integrator_energy_audit_every = 10;

    // picard.*
    double picard_horizon = 0.1;
    int picard_max_iterations = 20;
    double picard_convergence_tol = 1e-6;
    double picard_inner_dt = 1e-3;

    // initial.*
    std::string initial_scenario = "longitudinal";
    // Fraction of the slack threshold for the scenario amplitude.
    double initial_amplitude = 0.5;

    // output.*
    std::string output_dir = "out";

    // sag.* (force-free comparison report of the cable closed forms)
    double sag_span = 1000.0;
    double sag_ratio = 1.0 / 12.0;

    void validate() const;

    BridgeParams bridge_params() const;
    IntegratorConfig integrator_config() const;
    PicardConfig picard_config() const;
    Grid make_quadrature_grid() const;
};

/// Parse a configuration document. Throws ParameterError with the line
/// number on syntax errors and with the key name on semantic errors.
SimulationConfig parse_config(const std::string& text);

/// Canonical serialization: every key, sorted section order, %.17g values.
/// parse_config(emit_config(c)) reproduces c exactly.
std::string emit_config(const SimulationConfig& config);

} // namespace bridge
