#pragma once

#include "prsplit/grid.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace prsplit::harness {

/// Binary snapshot layout (little-endian):
///   bytes  0..9   ASCII "SPLITSNAP1"
///   bytes 10..11  zero
///   bytes 12..15  n (uint32)
///   bytes 16..19  component count (uint32)
///   bytes 20..23  zero
///   bytes 24..31  time (float64)
/// followed by each component as n·n row-major float64 values.
inline constexpr std::size_t snapshot_header_bytes = 32;

struct Snapshot {
    std::size_t n = 0;
    double time = 0.0;
    std::vector<std::vector<double>> components;
};

std::string encode_snapshot(const Snapshot& snap);
Snapshot decode_snapshot(const std::string& bytes);
Snapshot read_snapshot(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Rows `x1,x2,<names...>` for contour plotting.
std::string contour_csv(const GridSpec& grid, const std::vector<std::string>& names,
                        const std::vector<const Field*>& components);

} // namespace prsplit::harness
