#include "prsplit/harness/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace prsplit::harness {

namespace {

constexpr char magic[] = "SPLITSNAP1";

template <typename T>
void put_le(std::string& out, T value) {
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
    const U bits = std::bit_cast<U>(value);
    for (std::size_t b = 0; b < sizeof(U); ++b) out.push_back(static_cast<char>((bits >> (8 * b)) & 0xff));
}

template <typename T>
T get_le(const std::string& in, std::size_t offset) {
    using U = std::conditional_t<sizeof(T) == 8, std::uint64_t, std::uint32_t>;
    U bits = 0;
    for (std::size_t b = 0; b < sizeof(U); ++b)
        bits |= static_cast<U>(static_cast<unsigned char>(in[offset + b])) << (8 * b);
    return std::bit_cast<T>(bits);
}

} // namespace

std::string encode_snapshot(const Snapshot& snap) {
    std::string out;
    out.reserve(snapshot_header_bytes + snap.components.size() * snap.n * snap.n * 8);
    out.append(magic, 10);
    out.append(2, '\0');
    put_le(out, static_cast<std::uint32_t>(snap.n));
    put_le(out, static_cast<std::uint32_t>(snap.components.size()));
    out.append(4, '\0');
    put_le(out, snap.time);
    for (const auto& c : snap.components) {
        if (c.size() != snap.n * snap.n) throw std::invalid_argument("snapshot component has wrong size");
        for (double v : c) put_le(out, v);
    }
    return out;
}

Snapshot decode_snapshot(const std::string& bytes) {
    if (bytes.size() < snapshot_header_bytes || bytes.compare(0, 10, magic) != 0)
        throw std::runtime_error("not a SPLITSNAP1 snapshot");
    Snapshot snap;
    snap.n = get_le<std::uint32_t>(bytes, 12);
    const std::size_t comps = get_le<std::uint32_t>(bytes, 16);
    snap.time = get_le<double>(bytes, 24);
    const std::size_t per = snap.n * snap.n;
    if (bytes.size() != snapshot_header_bytes + comps * per * 8) throw std::runtime_error("truncated snapshot");
    std::size_t off = snapshot_header_bytes;
    snap.components.assign(comps, std::vector<double>(per));
    for (auto& c : snap.components)
        for (auto& v : c) {
            v = get_le<double>(bytes, off);
            off += 8;
        }
    return snap;
}

Snapshot read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return decode_snapshot(ss.str());
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string contour_csv(const GridSpec& grid, const std::vector<std::string>& names,
                        const std::vector<const Field*>& components) {
    std::string out = "x1,x2";
    for (const auto& name : names) out += "," + name;
    out += "\n";
    const std::size_t n = grid.n();
    char buf[64];
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g", grid.coord(j), grid.coord(i));
            out += buf;
            for (const Field* c : components) {
                std::snprintf(buf, sizeof buf, ",%.17g", (*c)[i * n + j]);
                out += buf;
            }
            out += "\n";
        }
    }
    return out;
}

} // namespace prsplit::harness
