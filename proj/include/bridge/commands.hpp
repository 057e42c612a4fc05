#pragma once

#include "bridge/config.hpp"
#include "bridge/io.hpp"

#include <string>
#include <vector>

namespace bridge {

struct CommandResult {
    std::vector<std::string> files; // paths relative to the output directory
    std::vector<ManifestMetric> metrics;
};

struct CommandOptions {
    std::string out_dir = "out";
    bool debug_xi_one = false;
    bool printed_exponents = false;
};

/// Build the full system (profile, basis, law, nonlocal data) from a
/// validated configuration.
BridgeSystem make_system(const SimulationConfig& config,
                         const CommandOptions& opts);

/// Initial state for a named preset. amplitude_fraction scales the field
/// amplitude relative to the smallest slack threshold, so presets stay
/// meaningful under any parameter set.
ModalState make_scenario_state(Scenario scenario, double amplitude_fraction,
                               const BridgeSystem& sys);

/// Largest |E(t) - E(0)| over the series, relative to the series scale.
double relative_drift(const std::vector<double>& series);

CommandResult cmd_cable(const SimulationConfig& config,
                        const CommandOptions& opts);
CommandResult cmd_eigs(const SimulationConfig& config,
                       const CommandOptions& opts);
CommandResult cmd_simulate(const SimulationConfig& config,
                           const CommandOptions& opts);
CommandResult cmd_picard(const SimulationConfig& config,
                         const CommandOptions& opts);
CommandResult cmd_energy_audit(const SimulationConfig& config,
                               const CommandOptions& opts);
CommandResult cmd_force_compare(const SimulationConfig& config,
                                const CommandOptions& opts);

} // namespace bridge
