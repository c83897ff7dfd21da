#pragma once

#include "prsplit/harness/study.hpp"

#include <filesystem>
#include <string>

namespace prsplit::harness {

/// Standalone log-log SVG of error against 1/n with one data polyline (class "data"),
/// circle markers and a dashed reference line (class "guide") of the scheme's order
/// through the finest point. Throws std::invalid_argument for an empty report.
std::string render_loglog_svg(const ConvergenceReport& report);

/// Renders and writes atomically; an empty report is refused before any file is created.
void emit_loglog_svg(const ConvergenceReport& report, const std::filesystem::path& path);

} // namespace prsplit::harness
