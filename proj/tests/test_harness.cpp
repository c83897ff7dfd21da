#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prsplit/errors.hpp"
#include "prsplit/harness/config.hpp"
#include "prsplit/harness/snapshot.hpp"
#include "prsplit/harness/study.hpp"
#include "prsplit/harness/svg_plot.hpp"
#include "test_support.hpp"

#include <fstream>
#include <regex>
#include <sstream>

using namespace prsplit;
using namespace prsplit::harness;
using namespace prsplit::test;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("prsplit_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string config_error(const std::string& text, Command cmd = Command::Run) {
    try {
        build_run_spec(parse_config_text(text), cmd);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

ConvergenceReport synthetic_report(double order, std::size_t points) {
    ConvergenceReport r;
    r.model = "caginalp";
    r.scheme = order == 1.0 ? "lie" : "pr";
    r.norm = "weighted";
    double h = 1.0 / 16;
    for (std::size_t i = 0; i < points; ++i, h /= 2)
        r.rows.push_back({h, static_cast<std::size_t>(1.0 / h), 0.3 * std::pow(h, order), 0.0});
    return r;
}

} // namespace

TEST_CASE("parse_config: valid run spec") {
    const auto spec = build_run_spec(
        parse_config_text("# comment line\nmodel = caginalp\nn = 128   # trailing comment\nscheme = pr\n"
                          "t_final = 1.0\nn_steps = 256\n"),
        Command::Run);
    CHECK(spec.model == ModelKind::Caginalp);
    CHECK(spec.scheme == Scheme::PeacemanRachford);
    CHECK(spec.n == 128);
    CHECK(spec.n_steps == 256);
    CHECK(spec.h() == 1.0 / 256);
    CHECK(spec.norm.tag == NormKind::Tag::WeightedCaginalp);
    CHECK(spec.snapshot_steps == std::vector<std::size_t>{0, 256});
}

TEST_CASE("parse_config: unknown key names the nearest valid key") {
    const std::string msg = config_error("modle = caginalp\n");
    CHECK(msg.find("modle") != std::string::npos);
    CHECK(msg.find("'model'") != std::string::npos);
    CHECK(msg.find(":1:") != std::string::npos);
}

TEST_CASE("parse_config: errors carry line numbers") {
    CHECK(config_error("model = caginalp\n\nthis line has no equals\n").find(":3:") != std::string::npos);
    CHECK(config_error("n = 8\nn = 16\n").find("duplicate") != std::string::npos);
    const std::string bad_n = config_error("model = caginalp\nscheme = pr\nn = 12\nt_final = 1\nn_steps = 4\n");
    CHECK(bad_n.find("line 3") != std::string::npos);
}

TEST_CASE("parse_config: missing keys are listed exhaustively") {
    const std::string msg = config_error("model = caginalp\n");
    for (const char* k : {"scheme", "n", "t_final", "n_steps"}) CHECK(msg.find(k) != std::string::npos);
    const std::string conv = config_error("model = caginalp\n", Command::Converge);
    for (const char* k : {"h_list", "ref_steps"}) CHECK(conv.find(k) != std::string::npos);
}

TEST_CASE("parse_config: flags override the file") {
    const auto file = parse_config_text("model = caginalp\nn = 128\nscheme = pr\nt_final = 1.0\nn_steps = 256\n");
    const auto spec = build_run_spec(merge(file, {{"n", {"64", 0}}}), Command::Run);
    CHECK(spec.n == 64);
}

TEST_CASE("parse_config: convergence study fields") {
    const auto spec = build_run_spec(
        parse_config_text("model = gray-scott\nscheme = pr\nn = 64\nt_final = 10\n"
                          "h_list = 1/8, 1/4, 1/16\nref_steps = 1280\nnorm = l2\n"),
        Command::Converge);
    CHECK(spec.h_list == std::vector<double>{0.25, 0.125, 0.0625});
    CHECK(spec.norm.tag == NormKind::Tag::L2);

    CHECK(config_error("model = gray-scott\nscheme = pr\nn = 64\nt_final = 10\nh_list = 1/4,1/16\nref_steps = 1000\n",
                       Command::Converge)
              .find("8x") != std::string::npos);
    CHECK(!config_error("model = gray-scott\nscheme = pr\nn = 64\nt_final = 10\nh_list = 0.3,0.1\nref_steps = 10000\n",
                        Command::Converge)
               .empty());
    CHECK(!config_error("model = caginalp\nscheme = pr\nn = 64\nt_final = 1\nn_steps = 4\nnorm = graph\n").empty());
    CHECK(parse_real("1/16") == 0.0625);
    CHECK_THROWS_AS(parse_real("1/0"), ConfigError);
    CHECK_THROWS_AS(parse_real("abc"), ConfigError);
}

TEST_CASE("snapshot encoding") {
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    for (std::size_t n : {4u, 8u}) {
        Snapshot s{n, u(rng), {Field(n * n), Field(n * n)}};
        for (auto& c : s.components)
            for (auto& v : c) v = u(rng);
        const std::string bytes = encode_snapshot(s);
        CHECK(bytes.size() == snapshot_header_bytes + 2 * n * n * 8);
        CHECK(bytes.substr(0, 10) == "SPLITSNAP1");
        CHECK(static_cast<unsigned char>(bytes[12]) == n);
        const Snapshot back = decode_snapshot(bytes);
        CHECK(back.n == n);
        CHECK(back.time == s.time);
        CHECK(back.components == s.components);
    }
    CHECK_THROWS(decode_snapshot("SPLITSNAP2 and some more bytes to fill the header"));
}

TEST_CASE("run_simulation with zero steps writes the initial data") {
    const fs::path out = scratch_dir("zero");
    auto spec = build_run_spec(parse_config_text("model = caginalp\nscheme = pr\nn = 16\nt_final = 1\nn_steps = 0\n"),
                               Command::Run);
    spec.out = out;
    std::ostringstream log;
    run_simulation(spec, log);
    const Snapshot snap = read_snapshot(out / "snapshot_0.bin");
    const State u0 = caginalp_initial(periodic_grid(16), spec.caginalp);
    CHECK(snap.time == 0.0);
    CHECK(snap.components[0] == caginalp_extract_theta(u0, spec.caginalp));
    CHECK(snap.components[1] == u0.second);
    const std::string csv = slurp(out / "snapshot_0.csv");
    CHECK(csv.rfind("x1,x2,theta,phi\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 16 * 16);
    fs::remove_all(out);
}

TEST_CASE("run_simulation Caginalp keeps the mean of psi") {
    const fs::path out = scratch_dir("cag");
    auto spec = build_run_spec(
        parse_config_text("model = caginalp\nscheme = pr\nn = 128\nt_final = 1\nn_steps = 256\nsnapshots = 256\n"),
        Command::Run);
    spec.out = out;
    std::ostringstream log;
    const auto result = run_simulation(spec, log);
    CHECK(result.final_state.all_finite());
    CHECK(result.mean_drift <= 1e-12);
    CHECK(log.str().find("mean(psi) drift") != std::string::npos);
    CHECK(log.str().find("warning") == std::string::npos);
    CHECK(fs::exists(out / "snapshot_256.bin"));
    fs::remove_all(out);
}

TEST_CASE("stability warnings appear exactly when the bound fails") {
    const fs::path out = scratch_dir("warn");
    auto run_with = [&](const std::string& scheme, const std::string& steps) {
        auto spec = build_run_spec(parse_config_text("model = caginalp\nscheme = " + scheme +
                                                     "\nn = 8\nt_final = 2.5\nsnapshots = 0\nn_steps = " + steps + "\n"),
                                   Command::Run);
        spec.out = out;
        std::ostringstream log;
        run_simulation(spec, log);
        return log.str().find("warning") != std::string::npos;
    };
    CHECK(run_with("pr", "2"));   // h = 1.25
    CHECK(!run_with("pr", "3"));  // h = 0.833
    CHECK(run_with("lie", "4"));  // h = 0.625
    CHECK(!run_with("lie", "5")); // h = 0.5
    fs::remove_all(out);
}

TEST_CASE("convergence study artifacts are deterministic") {
    const fs::path out = scratch_dir("conv");
    auto spec = build_run_spec(parse_config_text("model = caginalp\nscheme = pr\nn = 32\nt_final = 0.5\n"
                                                 "h_list = 1/8, 1/16, 1/32\nref_steps = 256\n"),
                               Command::Converge);
    spec.out = out;
    std::ostringstream log;
    const auto report = run_convergence_study(spec, log);
    const std::string first = slurp(out / "convergence.csv");
    const std::string svg = slurp(out / "convergence.svg");
    run_convergence_study(spec, log);
    CHECK(slurp(out / "convergence.csv") == first);
    CHECK(slurp(out / "convergence.svg") == svg);

    std::istringstream lines(first);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "h,n_steps,error,observed_order");
    std::getline(lines, line);
    CHECK(line.back() == ',');
    std::getline(lines, line);
    CHECK(line.back() != ',');
    CHECK(report.rows.size() == 3);
    CHECK(report.orders.size() == 2);
    CHECK(report.orders.back() > 1.5);
    fs::remove_all(out);
}

TEST_CASE("long mode takes the reference from a twice finer grid") {
    auto fine = periodic_grid(16);
    const Field f = sample(*fine, [](double x1, double x2) { return std::sin(x1) + x2; });
    const Field c = inject_coarse(*fine, f);
    auto coarse = periodic_grid(8);
    CHECK(max_diff(c, sample(*coarse, [](double x1, double x2) { return std::sin(x1) + x2; })) <= 1e-15);

    auto spec = build_run_spec(parse_config_text("model = caginalp\nscheme = pr\nn = 16\nt_final = 0.25\n"
                                                 "h_list = 1/8, 1/16\nref_steps = 128\nlong = true\n"),
                               Command::Converge);
    std::ostringstream log;
    const auto report = run_convergence_study(spec, log, false);
    CHECK(report.ref_n == 32);
    CHECK(report.rows.size() == 2);
}

TEST_CASE("log-log SVG structure") {
    const auto report = synthetic_report(2.0, 5);
    const std::string svg = render_loglog_svg(report);
    const std::regex polyline("<polyline class=\"data\"");
    const std::regex guide("<line class=\"guide\"");
    CHECK(std::distance(std::sregex_iterator(svg.begin(), svg.end(), polyline), std::sregex_iterator()) == 1);
    CHECK(std::distance(std::sregex_iterator(svg.begin(), svg.end(), guide), std::sregex_iterator()) == 1);
    CHECK(svg.find("<polyline", svg.find("<polyline") + 1) == std::string::npos);
    CHECK(svg.find("caginalp, pr, weighted norm") != std::string::npos);
}

TEST_CASE("slope-2 data runs parallel to the guide") {
    for (double order : {1.0, 2.0}) {
        const std::string svg = render_loglog_svg(synthetic_report(order, 5));
        std::smatch m;
        REQUIRE(std::regex_search(svg, m, std::regex("points=\"([^\"]*)\"")));
        std::vector<std::pair<double, double>> pts;
        std::istringstream in(m[1].str());
        std::string pair;
        while (in >> pair) {
            const auto comma = pair.find(',');
            pts.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
        }
        REQUIRE(pts.size() == 5);
        const double data_slope = (pts.back().second - pts.front().second) / (pts.back().first - pts.front().first);
        REQUIRE(std::regex_search(
            svg, m, std::regex("class=\"guide\" x1=\"([0-9.]+)\" y1=\"([0-9.]+)\" x2=\"([0-9.]+)\" y2=\"([0-9.]+)\"")));
        const double guide_slope = (std::stod(m[4]) - std::stod(m[2])) / (std::stod(m[3]) - std::stod(m[1]));
        CHECK(std::abs(data_slope / guide_slope - 1.0) <= 0.02);
    }
}

TEST_CASE("empty report is refused before any file is created") {
    const fs::path out = scratch_dir("svg");
    ConvergenceReport empty;
    CHECK_THROWS_AS(emit_loglog_svg(empty, out / "plot.svg"), std::invalid_argument);
    CHECK(!fs::exists(out / "plot.svg"));
    CHECK(!fs::exists(out));
}

TEST_CASE("local maxima counting") {
    auto g = periodic_grid(8);
    Field f(g->points(), 0.0);
    f[9] = 0.5;
    f[63] = 0.7;  // wraps around to neighbour index 0
    f[0] = 0.2;   // lower than its wrapped neighbour 63
    f[36] = 0.05; // below threshold
    f[20] = 0.4;
    f[21] = 0.4;  // plateau: neither is strict
    CHECK(count_local_maxima(*g, f, 0.1) == 2);

    const State u = grayscott_initial(periodic_grid(128));
    CHECK(count_local_maxima(*periodic_grid(128), u.second, 0.1) == 4);
}
