#include "bridge/commands.hpp"
#include "bridge/errors.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>

namespace {

using bridge::CommandOptions;
using bridge::CommandResult;
using bridge::SimulationConfig;

int dispatch(const std::string& command, const SimulationConfig& config,
             const CommandOptions& opts) {
    using Handler = CommandResult (*)(const SimulationConfig&,
                                      const CommandOptions&);
    static const std::map<std::string, Handler> handlers = {
        {"cable", bridge::cmd_cable},
        {"eigs", bridge::cmd_eigs},
        {"simulate", bridge::cmd_simulate},
        {"picard", bridge::cmd_picard},
        {"energy-audit", bridge::cmd_energy_audit},
        {"force-compare", bridge::cmd_force_compare},
    };
    const CommandResult result = handlers.at(command)(config, opts);

    const std::uint64_t hash = bridge::fnv1a_hash(bridge::emit_config(config));
    bridge::write_file(
        (std::filesystem::path(opts.out_dir) / "manifest.json").string(),
        bridge::manifest_json(hash, command, result.metrics, result.files));
    for (const bridge::ManifestMetric& m : result.metrics)
        std::cout << m.key << " = " << bridge::format_double(m.value) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Suspension bridge spectral simulator"};
    app.require_subcommand(0, 1);

    std::string config_path;
    CommandOptions opts;
    bool seed_manifest = false;
    app.add_option("--config", config_path, "Configuration file");
    app.add_option("--out", opts.out_dir, "Output directory");
    app.add_flag("--seed-manifest", seed_manifest,
                 "Print the default configuration and exit");
    app.add_flag("--debug-xi-one", opts.debug_xi_one,
                 "Force the local cable length to 1");
    app.add_flag("--printed-exponents", opts.printed_exponents,
                 "Use the k^2 / k modal stiffness exponents");

    for (const char* name : {"cable", "eigs", "simulate", "picard",
                             "energy-audit", "force-compare"})
        app.add_subcommand(name)->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (seed_manifest) {
            std::cout << bridge::emit_config(SimulationConfig{});
            return 0;
        }
        if (app.get_subcommands().empty()) {
            std::cerr << "error: no subcommand given\n" << app.help();
            return 2;
        }
        SimulationConfig config;
        if (!config_path.empty())
            config = bridge::parse_config(bridge::read_file(config_path));
        config.validate();
        return dispatch(app.get_subcommands().front()->get_name(), config,
                        opts);
    } catch (const bridge::BlowupError& e) {
        std::cerr << "blow-up error: " << e.what() << "\n";
        return 4;
    } catch (const bridge::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const bridge::ParameterError& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return 2;
    }
}
