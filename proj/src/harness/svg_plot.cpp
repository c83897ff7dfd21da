#include "prsplit/harness/svg_plot.hpp"

#include "prsplit/harness/snapshot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace prsplit::harness {

namespace {

constexpr double width = 640.0;
constexpr double height = 480.0;
constexpr double left = 80.0;
constexpr double right = 30.0;
constexpr double top = 30.0;
constexpr double bottom = 60.0;

std::string fmt(const char* pattern, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, a);
    return buf;
}

std::string num(double v) { return fmt("%.3f", v); }

} // namespace

std::string render_loglog_svg(const ConvergenceReport& report) {
    if (report.rows.empty()) throw std::invalid_argument("cannot plot an empty convergence report");

    std::vector<double> lx, ly;
    for (const auto& r : report.rows) {
        if (!(r.error > 0.0) || r.n_steps == 0) throw std::invalid_argument("log-log plot needs positive errors");
        lx.push_back(-std::log10(static_cast<double>(r.n_steps)));
        ly.push_back(std::log10(r.error));
    }

    // guide of slope p through the finest point, spanning the data's x range
    const double p = report.expected_order();
    const double x_lo = *std::min_element(lx.begin(), lx.end());
    const double x_hi = *std::max_element(lx.begin(), lx.end());
    const double anchor_x = lx.front() == x_lo ? lx.front() : lx.back();
    const double anchor_y = lx.front() == x_lo ? ly.front() : ly.back();
    const double g0 = anchor_y + p * (x_lo - anchor_x);
    const double g1 = anchor_y + p * (x_hi - anchor_x);

    double y_lo = std::min({*std::min_element(ly.begin(), ly.end()), g0, g1});
    double y_hi = std::max({*std::max_element(ly.begin(), ly.end()), g0, g1});
    double xmin = std::floor(x_lo), xmax = std::ceil(x_hi);
    double ymin = std::floor(y_lo), ymax = std::ceil(y_hi);
    if (xmax == xmin) xmax += 1.0;
    if (ymax == ymin) ymax += 1.0;

    const double pw = width - left - right;
    const double ph = height - top - bottom;
    auto px = [&](double v) { return left + (v - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double v) { return top + (ymax - v) / (ymax - ymin) * ph; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"white\"/>\n";
    s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";

    // axes and decade ticks
    s += "<rect class=\"axis\" x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" +
         num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double d = xmin; d <= xmax + 1e-9; d += 1.0) {
        s += "<path class=\"tick\" d=\"M" + num(px(d)) + " " + num(top + ph) + " v6\" stroke=\"black\"/>\n";
        s += "<text x=\"" + num(px(d)) + "\" y=\"" + num(top + ph + 20) + "\" text-anchor=\"middle\">1e" +
             fmt("%.0f", d) + "</text>\n";
    }
    for (double d = ymin; d <= ymax + 1e-9; d += 1.0) {
        s += "<path class=\"tick\" d=\"M" + num(left - 6) + " " + num(py(d)) + " h6\" stroke=\"black\"/>\n";
        s += "<text x=\"" + num(left - 10) + "\" y=\"" + num(py(d) + 4) + "\" text-anchor=\"end\">1e" +
             fmt("%.0f", d) + "</text>\n";
    }
    s += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(height - 15) +
         "\" text-anchor=\"middle\">1/n (inverse number of time steps)</text>\n";
    s += "<text x=\"20\" y=\"" + num(top + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         num(top + ph / 2) + ")\">global error</text>\n";

    s += "<line class=\"guide\" x1=\"" + num(px(x_lo)) + "\" y1=\"" + num(py(g0)) + "\" x2=\"" + num(px(x_hi)) +
         "\" y2=\"" + num(py(g1)) + "\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";

    s += "<polyline class=\"data\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < lx.size(); ++i) s += (i ? " " : "") + num(px(lx[i])) + "," + num(py(ly[i]));
    s += "\"/>\n";
    for (std::size_t i = 0; i < lx.size(); ++i)
        s += "<circle class=\"marker\" cx=\"" + num(px(lx[i])) + "\" cy=\"" + num(py(ly[i])) +
             "\" r=\"3.5\" fill=\"#1f4e9c\"/>\n";

    s += "<text class=\"legend\" x=\"" + num(left + 12) + "\" y=\"" + num(top + 18) + "\">" + report.model + ", " +
         report.scheme + ", " + report.norm + " norm</text>\n";
    s += "<text class=\"legend\" x=\"" + num(left + 12) + "\" y=\"" + num(top + 34) + "\">dashed: slope " +
         fmt("%.0f", p) + "</text>\n";
    s += "</g>\n</svg>\n";
    return s;
}

void emit_loglog_svg(const ConvergenceReport& report, const std::filesystem::path& path) {
    const std::string svg = render_loglog_svg(report);
    write_file_atomic(path, svg);
}

} // namespace prsplit::harness
