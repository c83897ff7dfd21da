#pragma once

#include "prsplit/integrators.hpp"
#include "prsplit/models.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prsplit::harness {

enum class ModelKind { Caginalp, GrayScott };
enum class Command { Run, Converge };

std::string model_name(ModelKind m);

/// Fully validated description of one run or convergence study. Deterministic: there
/// is no seed, every artifact is a function of these fields.
struct RunSpec {
    ModelKind model = ModelKind::Caginalp;
    Scheme scheme = Scheme::PeacemanRachford;
    std::size_t n = 0;
    double t_final = 0.0;
    std::size_t n_steps = 0;          // run
    std::vector<double> h_list;       // converge, strictly decreasing
    std::size_t ref_steps = 0;        // converge
    NormKind norm;
    std::filesystem::path out;
    bool enforce_stability = false;
    bool long_mode = false;
    std::vector<std::size_t> snapshot_steps; // run; defaults to {0, n_steps}

    CaginalpParams caginalp;
    GrayScottParams gray_scott;

    /// t_final / n_steps; a zero-step run reports t_final so the stepper config stays valid.
    double h() const { return n_steps == 0 ? t_final : t_final / static_cast<double>(n_steps); }
};

/// Raw `key = value` entries with the line they came from (0 for command-line flags).
struct ConfigEntry {
    std::string value;
    std::size_t line = 0;
};
using ConfigEntries = std::map<std::string, ConfigEntry>;

/// Every key accepted in config files; flags use the same names with '-' for '_'.
const std::vector<std::string>& known_keys();

/// Parses line-oriented `key = value` text; `#` starts a comment. Unknown keys, missing
/// '=' and duplicate keys are ConfigErrors that carry the line number.
ConfigEntries parse_config_text(const std::string& text, const std::string& source = "<config>");
ConfigEntries parse_config_file(const std::filesystem::path& path);

/// Entries in `overrides` replace those in `base`.
ConfigEntries merge(ConfigEntries base, const ConfigEntries& overrides);

/// Validates and converts entries into a RunSpec. All missing required keys are listed in
/// a single ConfigError.
RunSpec build_run_spec(const ConfigEntries& entries, Command command);

/// Parses "0.25", "1/16" and similar.
double parse_real(const std::string& text);

std::string nearest_key(const std::string& key);

/// PRSPLIT_OUT_DIR when set, otherwise "prsplit_out".
std::filesystem::path default_output_dir();

} // namespace prsplit::harness
