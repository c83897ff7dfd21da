// Command-line front end: `prsplit run` integrates one configuration and writes
// snapshots, `prsplit converge` runs a temporal convergence study.

#include "prsplit/errors.hpp"
#include "prsplit/harness/config.hpp"
#include "prsplit/harness/study.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace {

using namespace prsplit;
using namespace prsplit::harness;

constexpr int exit_config = 2;
constexpr int exit_numerical = 3;

struct Flags {
    std::optional<std::string> config;
    std::map<std::string, std::string> values;
    bool enforce_stability = false;
    bool long_mode = false;
};

void add_common(CLI::App& cmd, Flags& flags, bool converge) {
    cmd.add_option("--config", flags.config, "line-oriented 'key = value' config file");
    const std::vector<std::pair<std::string, std::string>> opts = {
        {"--model", "caginalp or gray-scott"},
        {"--scheme", "pr or lie"},
        {"--n", "grid points per dimension (power of two)"},
        {"--t-final", "final time"},
        {"--norm", "l2, weighted (caginalp) or graph (gray-scott)"},
        {"--out", "output directory (default $PRSPLIT_OUT_DIR or ./prsplit_out)"},
    };
    for (const auto& [name, help] : opts) cmd.add_option(name, flags.values[name.substr(2)], help);
    if (converge) {
        cmd.add_option("--h-list", flags.values["h-list"], "comma-separated step sizes, e.g. 1/16,1/32");
        cmd.add_option("--ref-steps", flags.values["ref-steps"], "number of steps of the reference run");
    } else {
        cmd.add_option("--n-steps", flags.values["n-steps"], "number of time steps");
        cmd.add_option("--snapshots", flags.values["snapshots"], "comma-separated step indices to write");
    }
    cmd.add_flag("--enforce-stability", flags.enforce_stability, "fail instead of warn on step-size bound");
    cmd.add_flag("--long", flags.long_mode, "high-resolution protocol: reference on a twice finer grid");
}

RunSpec resolve(const Flags& flags, Command command) {
    ConfigEntries entries;
    if (flags.config) entries = parse_config_file(*flags.config);
    ConfigEntries overrides;
    for (const auto& [name, value] : flags.values) {
        if (value.empty()) continue;
        std::string key = name;
        for (char& c : key)
            if (c == '-') c = '_';
        overrides[key] = {value, 0};
    }
    if (flags.enforce_stability) overrides["enforce_stability"] = {"true", 0};
    if (flags.long_mode) overrides["long"] = {"true", 0};
    return build_run_spec(merge(std::move(entries), overrides), command);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Peaceman-Rachford and Lie splitting for Caginalp and Gray-Scott reaction-diffusion"};
    app.require_subcommand(1);
    Flags run_flags, conv_flags;
    auto* run = app.add_subcommand("run", "integrate one configuration and write snapshots");
    auto* converge = app.add_subcommand("converge", "temporal convergence study with CSV and SVG output");
    add_common(*run, run_flags, false);
    add_common(*converge, conv_flags, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    try {
        if (run->parsed()) {
            const RunSpec spec = resolve(run_flags, Command::Run);
            run_simulation(spec, std::cerr);
        } else {
            const RunSpec spec = resolve(conv_flags, Command::Converge);
            const auto report = run_convergence_study(spec, std::cerr);
            std::cout << report_csv(report);
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_config;
    } catch (const GridMismatch& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_config;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
