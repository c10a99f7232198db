// layer-ineq: geometric constants, inequality and identity verification, and
// Rayleigh-quotient sharpness estimates for vector fields on spherical layers.

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "lineq/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"layer inequality verification toolkit"};
    app.set_version_flag("--version", lineq::kToolVersion);
    app.require_subcommand(1);

    std::string config_path, out_path, csv_path;
    std::uint64_t seed = 0;
    bool seed_given = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON configuration file")->required();
        cmd->add_option("--out", out_path, "write the machine-readable JSON report here");
        cmd->add_option("--csv", csv_path, "write the table export here");
        cmd->add_option("--seed", seed, "override the base seed of seeded field specs")
            ->each([&](const std::string&) { seed_given = true; });
    };

    for (const char* name : {"geometry", "verify", "identity", "sharpness", "convergence"})
        add_common(app.add_subcommand(name));

    CLI11_PARSE(app, argc, argv);

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        lineq::RunConfig config = lineq::load_config_file(config_path);
        if (seed_given) config.seed_override = seed;
        lineq::OutputOptions options{out_path, csv_path};
        return lineq::run_command(command, config, options, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return lineq::kExitError;
    }
}
