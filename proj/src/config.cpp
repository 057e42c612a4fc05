#include "bridge/config.hpp"
#include "bridge/errors.hpp"

#include <cstdio>
#include <functional>
#include <map>
#include <sstream>

namespace bridge {

Scenario parse_scenario(const std::string& tag) {
    if (tag == "equilibrium") return Scenario::Equilibrium;
    if (tag == "longitudinal") return Scenario::Longitudinal;
    if (tag == "torsional-perturbed") return Scenario::TorsionalPerturbed;
    if (tag == "slackening") return Scenario::Slackening;
    throw ParameterError("initial.scenario: unknown scenario '" + tag + "'");
}

std::string scenario_tag(Scenario scenario) {
    switch (scenario) {
    case Scenario::Equilibrium: return "equilibrium";
    case Scenario::Longitudinal: return "longitudinal";
    case Scenario::TorsionalPerturbed: return "torsional-perturbed";
    case Scenario::Slackening: return "slackening";
    }
    return "equilibrium";
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParameterError(key + ": '" + value + "' is not a number");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParameterError(key + ": '" + value + "' is not an integer");
    }
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

void SimulationConfig::validate() const {
    if (!(cable_h0 > 0.0)) throw ParameterError("cable.h0 must be positive");
    if (cable_m < 0.0) throw ParameterError("cable.m must be nonnegative");
    if (!(cable_g > 0.0)) throw ParameterError("cable.g must be positive");
    if (!(cable_s0 > 0.0)) throw ParameterError("cable.s0 must be positive");
    if (!(cable_shoot_tolerance > 0.0))
        throw ParameterError("cable.shoot_tolerance must be positive");
    if (cable_ivp_steps < 1)
        throw ParameterError("cable.ivp_steps must be >= 1");

    if (!(bridge_M > 0.0)) throw ParameterError("bridge.M must be positive");
    if (!(bridge_ell > 0.0)) throw ParameterError("bridge.ell must be positive");
    if (!(bridge_EI > 0.0)) throw ParameterError("bridge.EI must be positive");
    if (!(bridge_GK > 0.0)) throw ParameterError("bridge.GK must be positive");
    if (!(bridge_AE > 0.0)) throw ParameterError("bridge.AE must be positive");
    if (!(bridge_kappa0 > 0.0))
        throw ParameterError("bridge.kappa0 must be positive");
    if (bridge_n_modes < 1)
        throw ParameterError("bridge.n_modes must be >= 1");
    if (bridge_mode != "full_bridge" && bridge_mode != "single_beam")
        throw ParameterError(
            "bridge.mode must be 'full_bridge' or 'single_beam'");

    if (grid_panel_count < 1)
        throw ParameterError("grid.panel_count must be >= 1");
    if (grid_points_per_panel < 2 || grid_points_per_panel > 5)
        throw ParameterError("grid.points_per_panel must be in 2..5");
    if (grid_fd_points < 16 * bridge_n_modes)
        throw ParameterError("grid.fd_points must be >= 16 * bridge.n_modes");

    if (integrator_method != "verlet" && integrator_method != "rk4")
        throw ParameterError("integrator.method must be 'verlet' or 'rk4'");
    integrator_config().validate();
    picard_config().validate();

    parse_scenario(initial_scenario);
    if (!(initial_amplitude >= 0.0))
        throw ParameterError("initial.amplitude must be nonnegative");
    if (output_dir.empty())
        throw ParameterError("output.dir must be nonempty");
    if (!(sag_span > 0.0)) throw ParameterError("sag.span must be positive");
    if (!(sag_ratio > 0.0 && sag_ratio < 0.5))
        throw ParameterError("sag.ratio must be in (0, 1/2)");
}

BridgeParams SimulationConfig::bridge_params() const {
    BridgeParams p;
    p.M = bridge_M;
    p.m = cable_m;
    p.ell = bridge_ell;
    p.EI = bridge_EI;
    p.GK = bridge_GK;
    p.AE = bridge_AE;
    p.H0 = cable_h0;
    p.g = cable_g;
    p.kappa0 = bridge_kappa0;
    p.n_modes = bridge_n_modes;
    p.mode_flag = bridge_mode == "single_beam" ? ModeFlag::SingleBeam
                                               : ModeFlag::FullBridge;
    return p;
}

IntegratorConfig SimulationConfig::integrator_config() const {
    IntegratorConfig c;
    c.method = integrator_method == "rk4" ? Method::Rk4 : Method::Verlet;
    c.dt = integrator_dt;
    c.t_end = integrator_t_end;
    c.snapshot_every = integrator_snapshot_every;
    c.energy_audit_every = integrator_energy_audit_every;
    return c;
}

PicardConfig SimulationConfig::picard_config() const {
    PicardConfig c;
    c.horizon = picard_horizon;
    c.max_iterations = picard_max_iterations;
    c.convergence_tol = picard_convergence_tol;
    c.inner_dt = picard_inner_dt;
    return c;
}

Grid SimulationConfig::make_quadrature_grid() const {
    return make_grid(M_PI, grid_panel_count, grid_points_per_panel);
}

namespace {

using Setter = std::function<void(SimulationConfig&, const std::string& key,
                                  const std::string& value)>;

const std::map<std::string, Setter>& key_table() {
    static const std::map<std::string, Setter> table = {
        {"cable.h0", [](SimulationConfig& c, const std::string& k,
                        const std::string& v) { c.cable_h0 = parse_double(k, v); }},
        {"cable.m", [](SimulationConfig& c, const std::string& k,
                       const std::string& v) { c.cable_m = parse_double(k, v); }},
        {"cable.g", [](SimulationConfig& c, const std::string& k,
                       const std::string& v) { c.cable_g = parse_double(k, v); }},
        {"cable.s0", [](SimulationConfig& c, const std::string& k,
                        const std::string& v) { c.cable_s0 = parse_double(k, v); }},
        {"cable.shoot_tolerance",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.cable_shoot_tolerance = parse_double(k, v);
         }},
        {"cable.ivp_steps",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.cable_ivp_steps = parse_int(k, v);
         }},
        {"bridge.M", [](SimulationConfig& c, const std::string& k,
                        const std::string& v) { c.bridge_M = parse_double(k, v); }},
        {"bridge.ell",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.bridge_ell = parse_double(k, v);
         }},
        {"bridge.EI", [](SimulationConfig& c, const std::string& k,
                         const std::string& v) { c.bridge_EI = parse_double(k, v); }},
        {"bridge.GK", [](SimulationConfig& c, const std::string& k,
                         const std::string& v) { c.bridge_GK = parse_double(k, v); }},
        {"bridge.AE", [](SimulationConfig& c, const std::string& k,
                         const std::string& v) { c.bridge_AE = parse_double(k, v); }},
        {"bridge.kappa0",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.bridge_kappa0 = parse_double(k, v);
         }},
        {"bridge.n_modes",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.bridge_n_modes = parse_int(k, v);
         }},
        {"bridge.mode",
         [](SimulationConfig& c, const std::string&, const std::string& v) {
             c.bridge_mode = v;
         }},
        {"grid.panel_count",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.grid_panel_count = parse_int(k, v);
         }},
        {"grid.points_per_panel",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.grid_points_per_panel = parse_int(k, v);
         }},
        {"grid.fd_points",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.grid_fd_points = parse_int(k, v);
         }},
        {"integrator.method",
         [](SimulationConfig& c, const std::string&, const std::string& v) {
             c.integrator_method = v;
         }},
        {"integrator.dt",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.integrator_dt = parse_double(k, v);
         }},
        {"integrator.t_end",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.integrator_t_end = parse_double(k, v);
         }},
        {"integrator.snapshot_every",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.integrator_snapshot_every = parse_int(k, v);
         }},
        {"integrator.energy_audit_every",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.integrator_energy_audit_every = parse_int(k, v);
         }},
        {"picard.horizon",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.picard_horizon = parse_double(k, v);
         }},
        {"picard.max_iterations",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.picard_max_iterations = parse_int(k, v);
         }},
        {"picard.convergence_tol",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.picard_convergence_tol = parse_double(k, v);
         }},
        {"picard.inner_dt",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.picard_inner_dt = parse_double(k, v);
         }},
        {"initial.scenario",
         [](SimulationConfig& c, const std::string&, const std::string& v) {
             c.initial_scenario = v;
         }},
        {"initial.amplitude",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.initial_amplitude = parse_double(k, v);
         }},
        {"output.dir",
         [](SimulationConfig& c, const std::string&, const std::string& v) {
             c.output_dir = v;
         }},
        {"sag.span",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.sag_span = parse_double(k, v);
         }},
        {"sag.ratio",
         [](SimulationConfig& c, const std::string& k, const std::string& v) {
             c.sag_ratio = parse_double(k, v);
         }},
    };
    return table;
}

} // namespace

SimulationConfig parse_config(const std::string& text) {
    SimulationConfig config;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParameterError("line " + std::to_string(lineno) +
                                 ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParameterError("line " + std::to_string(lineno) +
                                 ": empty key or value");
        const auto it = key_table().find(key);
        if (it == key_table().end())
            throw ParameterError("line " + std::to_string(lineno) +
                                 ": unknown key '" + key + "'");
        it->second(config, key, value);
    }
    config.validate();
    return config;
}

std::string emit_config(const SimulationConfig& c) {
    std::ostringstream out;
    out << "cable.h0 = " << fmt(c.cable_h0) << "\n";
    out << "cable.m = " << fmt(c.cable_m) << "\n";
    out << "cable.g = " << fmt(c.cable_g) << "\n";
    out << "cable.s0 = " << fmt(c.cable_s0) << "\n";
    out << "cable.shoot_tolerance = " << fmt(c.cable_shoot_tolerance) << "\n";
    out << "cable.ivp_steps = " << c.cable_ivp_steps << "\n";
    out << "bridge.M = " << fmt(c.bridge_M) << "\n";
    out << "bridge.ell = " << fmt(c.bridge_ell) << "\n";
    out << "bridge.EI = " << fmt(c.bridge_EI) << "\n";
    out << "bridge.GK = " << fmt(c.bridge_GK) << "\n";
    out << "bridge.AE = " << fmt(c.bridge_AE) << "\n";
    out << "bridge.kappa0 = " << fmt(c.bridge_kappa0) << "\n";
    out << "bridge.n_modes = " << c.bridge_n_modes << "\n";
    out << "bridge.mode = " << c.bridge_mode << "\n";
    out << "grid.panel_count = " << c.grid_panel_count << "\n";
    out << "grid.points_per_panel = " << c.grid_points_per_panel << "\n";
    out << "grid.fd_points = " << c.grid_fd_points << "\n";
    out << "integrator.method = " << c.integrator_method << "\n";
    out << "integrator.dt = " << fmt(c.integrator_dt) << "\n";
    out << "integrator.t_end = " << fmt(c.integrator_t_end) << "\n";
    out << "integrator.snapshot_every = " << c.integrator_snapshot_every
        << "\n";
    out << "integrator.energy_audit_every = " << c.integrator_energy_audit_every
        << "\n";
    out << "picard.horizon = " << fmt(c.picard_horizon) << "\n";
    out << "picard.max_iterations = " << c.picard_max_iterations << "\n";
    out << "picard.convergence_tol = " << fmt(c.picard_convergence_tol)
        << "\n";
    out << "picard.inner_dt = " << fmt(c.picard_inner_dt) << "\n";
    out << "initial.scenario = " << c.initial_scenario << "\n";
    out << "initial.amplitude = " << fmt(c.initial_amplitude) << "\n";
    out << "output.dir = " << c.output_dir << "\n";
    out << "sag.span = " << fmt(c.sag_span) << "\n";
    out << "sag.ratio = " << fmt(c.sag_ratio) << "\n";
    return out.str();
}

} // namespace bridge
