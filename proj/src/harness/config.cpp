#include "prsplit/harness/config.hpp"

#include "prsplit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace prsplit::harness {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::string where(const ConfigEntry& e) {
    return e.line == 0 ? std::string("command line") : "line " + std::to_string(e.line);
}

std::size_t parse_count(const std::string& key, const ConfigEntry& e) {
    const std::string v = trim(e.value);
    std::size_t pos = 0;
    long long x = 0;
    try {
        x = std::stoll(v, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != v.size() || v.empty() || x < 0)
        throw ConfigError(where(e) + ": " + key + " expects a nonnegative integer, got '" + e.value + "'");
    return static_cast<std::size_t>(x);
}

double parse_real_entry(const std::string& key, const ConfigEntry& e) {
    try {
        return parse_real(e.value);
    } catch (const ConfigError&) {
        throw ConfigError(where(e) + ": " + key + " expects a real number, got '" + e.value + "'");
    }
}

bool parse_bool(const std::string& key, const ConfigEntry& e) {
    const std::string v = trim(e.value);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError(where(e) + ": " + key + " expects true or false, got '" + e.value + "'");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

std::string model_name(ModelKind m) { return m == ModelKind::Caginalp ? "caginalp" : "gray-scott"; }

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys{
        "model", "scheme", "n",  "t_final", "n_steps", "h_list", "ref_steps", "norm", "out",
        "enforce_stability", "long", "snapshots", "ell", "d1", "d2", "l1", "l2"};
    return keys;
}

std::string nearest_key(const std::string& key) {
    const auto& keys = known_keys();
    return *std::min_element(keys.begin(), keys.end(), [&](const std::string& a, const std::string& b) {
        return edit_distance(key, a) < edit_distance(key, b);
    });
}

double parse_real(const std::string& text) {
    const std::string v = trim(text);
    auto one = [](const std::string& s) {
        std::size_t pos = 0;
        double x = 0.0;
        try {
            x = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw ConfigError("not a number: '" + s + "'");
        }
        if (pos != s.size() || !std::isfinite(x)) throw ConfigError("not a number: '" + s + "'");
        return x;
    };
    const auto slash = v.find('/');
    if (slash == std::string::npos) return one(v);
    const double num = one(trim(v.substr(0, slash)));
    const double den = one(trim(v.substr(slash + 1)));
    if (den == 0.0) throw ConfigError("zero denominator in '" + v + "'");
    return num / den;
}

ConfigEntries parse_config_text(const std::string& text, const std::string& source) {
    ConfigEntries out;
    std::istringstream in(text);
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string content = trim(raw.substr(0, raw.find('#')));
        if (content.empty()) continue;
        const auto eq = content.find('=');
        const std::string at = source + ":" + std::to_string(line) + ": ";
        if (eq == std::string::npos) throw ConfigError(at + "expected 'key = value'");
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key.empty()) throw ConfigError(at + "missing key before '='");
        const auto& keys = known_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ConfigError(at + "unknown key '" + key + "' (did you mean '" + nearest_key(key) + "'?)");
        if (out.count(key)) throw ConfigError(at + "duplicate key '" + key + "'");
        out[key] = {value, line};
    }
    return out;
}

ConfigEntries parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), path.string());
}

ConfigEntries merge(ConfigEntries base, const ConfigEntries& overrides) {
    for (const auto& [k, v] : overrides) base[k] = v;
    return base;
}

std::filesystem::path default_output_dir() {
    if (const char* env = std::getenv("PRSPLIT_OUT_DIR"); env && *env) return env;
    return "prsplit_out";
}

RunSpec build_run_spec(const ConfigEntries& entries, Command command) {
    std::vector<std::string> required{"model", "scheme", "n", "t_final"};
    if (command == Command::Run) {
        required.push_back("n_steps");
    } else {
        required.push_back("h_list");
        required.push_back("ref_steps");
    }
    std::vector<std::string> missing;
    for (const auto& k : required)
        if (!entries.count(k)) missing.push_back(k);
    if (!missing.empty()) {
        std::string msg = "missing required keys:";
        for (const auto& k : missing) msg += " " + k;
        throw ConfigError(msg);
    }
    for (const auto& [k, e] : entries) {
        const auto& keys = known_keys();
        if (std::find(keys.begin(), keys.end(), k) == keys.end())
            throw ConfigError(where(e) + ": unknown key '" + k + "' (did you mean '" + nearest_key(k) + "'?)");
    }

    RunSpec spec;
    const auto& model = entries.at("model");
    if (model.value == "caginalp") spec.model = ModelKind::Caginalp;
    else if (model.value == "gray-scott" || model.value == "grayscott") spec.model = ModelKind::GrayScott;
    else throw ConfigError(where(model) + ": model must be caginalp or gray-scott, got '" + model.value + "'");

    const auto& scheme = entries.at("scheme");
    if (scheme.value == "pr") spec.scheme = Scheme::PeacemanRachford;
    else if (scheme.value == "lie") spec.scheme = Scheme::Lie;
    else throw ConfigError(where(scheme) + ": scheme must be pr or lie, got '" + scheme.value + "'");

    spec.n = parse_count("n", entries.at("n"));
    if (spec.n < 4 || (spec.n & (spec.n - 1)) != 0)
        throw ConfigError(where(entries.at("n")) + ": n must be a power of two and at least 4");
    spec.t_final = parse_real_entry("t_final", entries.at("t_final"));
    if (!(spec.t_final > 0.0)) throw ConfigError(where(entries.at("t_final")) + ": t_final must be positive");

    auto real_or = [&](const char* key, double fallback) {
        auto it = entries.find(key);
        return it == entries.end() ? fallback : parse_real_entry(key, it->second);
    };
    spec.caginalp.ell = real_or("ell", spec.caginalp.ell);
    spec.gray_scott.d1 = real_or("d1", spec.gray_scott.d1);
    spec.gray_scott.d2 = real_or("d2", spec.gray_scott.d2);
    spec.gray_scott.ell1 = real_or("l1", spec.gray_scott.ell1);
    spec.gray_scott.ell2 = real_or("l2", spec.gray_scott.ell2);
    if (spec.model == ModelKind::Caginalp) spec.caginalp.validate();
    else spec.gray_scott.validate();

    const NormKind model_norm = spec.model == ModelKind::Caginalp
                                    ? NormKind::weighted_caginalp(spec.caginalp.ell)
                                    : NormKind::graph_gray_scott(spec.gray_scott.d1, spec.gray_scott.d2);
    spec.norm = model_norm;
    if (auto it = entries.find("norm"); it != entries.end()) {
        const std::string& v = it->second.value;
        if (v == "l2") spec.norm = NormKind::l2();
        else if (v == "weighted" && spec.model == ModelKind::Caginalp) spec.norm = model_norm;
        else if (v == "graph" && spec.model == ModelKind::GrayScott) spec.norm = model_norm;
        else
            throw ConfigError(where(it->second) + ": norm '" + v + "' is not available for model " +
                              model_name(spec.model) + " (use l2 or the model norm)");
    }

    if (auto it = entries.find("enforce_stability"); it != entries.end())
        spec.enforce_stability = parse_bool("enforce_stability", it->second);
    if (auto it = entries.find("long"); it != entries.end()) spec.long_mode = parse_bool("long", it->second);
    if (auto it = entries.find("out"); it != entries.end()) spec.out = it->second.value;
    else spec.out = default_output_dir();

    auto steps_for = [&](double h, const ConfigEntry& e) {
        const double ratio = spec.t_final / h;
        const double rounded = std::round(ratio);
        if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * ratio)
            throw ConfigError(where(e) + ": step size " + std::to_string(h) + " does not divide t_final");
        return static_cast<std::size_t>(rounded);
    };

    if (command == Command::Run) {
        spec.n_steps = parse_count("n_steps", entries.at("n_steps"));
        spec.snapshot_steps = {0, spec.n_steps};
        if (auto it = entries.find("snapshots"); it != entries.end()) {
            spec.snapshot_steps.clear();
            for (const auto& item : split_list(it->second.value)) {
                const std::size_t s = parse_count("snapshots", {item, it->second.line});
                if (s > spec.n_steps)
                    throw ConfigError(where(it->second) + ": snapshot step " + item + " exceeds n_steps");
                spec.snapshot_steps.push_back(s);
            }
        }
    } else {
        const auto& hl = entries.at("h_list");
        for (const auto& item : split_list(hl.value)) {
            const double h = parse_real_entry("h_list", {item, hl.line});
            if (!(h > 0.0)) throw ConfigError(where(hl) + ": step sizes must be positive");
            spec.h_list.push_back(h);
        }
        if (spec.h_list.size() < 2) throw ConfigError(where(hl) + ": h_list needs at least two step sizes");
        std::sort(spec.h_list.begin(), spec.h_list.end(), std::greater<>());
        if (std::adjacent_find(spec.h_list.begin(), spec.h_list.end()) != spec.h_list.end())
            throw ConfigError(where(hl) + ": h_list contains duplicate step sizes");
        std::size_t finest = 0;
        for (double h : spec.h_list) finest = std::max(finest, steps_for(h, hl));
        spec.ref_steps = parse_count("ref_steps", entries.at("ref_steps"));
        if (spec.ref_steps < 8 * finest)
            throw ConfigError(where(entries.at("ref_steps")) + ": ref_steps must be at least 8x the finest study (" +
                              std::to_string(8 * finest) + ")");
    }
    return spec;
}

} // namespace prsplit::harness
