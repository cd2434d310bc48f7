#include "hrg/graph_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#include "hrg/error.hpp"

namespace hrg {

namespace {

constexpr std::array<char, 4> kMagic = {'H', 'R', 'G', '1'};

template <class T>
T to_little(T value) noexcept {
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
    std::reverse(bytes.begin(), bytes.end());
    return std::bit_cast<T>(bytes);
  }
  return value;
}

template <class T>
void put(std::ostream& out, T value) {
  const auto le = to_little(value);
  out.write(reinterpret_cast<const char*>(&le), sizeof(le));
}

template <class T>
T get(std::istream& in, const char* field) {
  T raw{};
  if (!in.read(reinterpret_cast<char*>(&raw), sizeof(raw)))
    throw FormatError(field, "unexpected end of file");
  return to_little(raw);
}

// Bytes left in a seekable stream, or max when the stream cannot tell.
std::uint64_t remaining_bytes(std::istream& in) {
  const auto here = in.tellg();
  if (here < 0) return std::numeric_limits<std::uint64_t>::max();
  in.seekg(0, std::ios::end);
  const auto end = in.tellg();
  in.seekg(here);
  if (end < here) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(end - here);
}

}  // namespace

void write_graph(std::ostream& out, const HrgGraph& graph) {
  const auto& params = graph.params();
  const std::uint64_t n = graph.num_vertices();
  out.write(kMagic.data(), kMagic.size());
  put<std::uint64_t>(out, n);
  put<std::uint64_t>(out, graph.num_edges());
  put<double>(out, params.alpha);
  put<double>(out, params.R);
  put<std::uint64_t>(out, params.seed);
  for (const auto& p : graph.coords()) {
    put<double>(out, p.radius);
    put<double>(out, p.angle);
  }
  for (std::uint64_t off : graph.offsets()) put<std::uint64_t>(out, off);
  // In-memory ids are 32-bit, so n < 2^32 always holds here.
  for (Vertex w : graph.neighbor_array()) put<std::uint32_t>(out, w);
  if (!out) throw std::runtime_error("write_graph: output stream failed");
}

void write_graph(const std::filesystem::path& path, const HrgGraph& graph) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("write_graph: cannot open " + path.string());
  write_graph(out, graph);
}

HrgGraph read_graph(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size())) throw FormatError("magic", "unexpected end of file");
  if (magic != kMagic) throw FormatError("magic", "expected \"HRG1\"");

  const auto n = get<std::uint64_t>(in, "n");
  const auto m = get<std::uint64_t>(in, "m");
  ModelParams params;
  params.n = n;
  params.alpha = get<double>(in, "alpha");
  params.R = get<double>(in, "R");
  params.seed = get<std::uint64_t>(in, "seed");

  if (n >= (std::uint64_t{1} << 32)) throw FormatError("n", "exceeds 32-bit vertex ids");
  if (m > (std::numeric_limits<std::uint64_t>::max() / 16)) throw FormatError("m", "overflow");
  if (!(params.alpha > 0.5 && params.alpha < 1.0))
    throw FormatError("alpha", "must lie strictly inside (0.5, 1)");
  if (!(params.R > 0.0) || !std::isfinite(params.R))
    throw FormatError("R", "must be positive and finite");

  // Checked before allocating so a corrupt header cannot request huge buffers.
  const std::uint64_t coord_bytes = n * 16;
  const std::uint64_t offset_bytes = (n + 1) * 8;
  const std::uint64_t left = remaining_bytes(in);
  if (coord_bytes > left) throw FormatError("coords", "file too short for the declared n");
  if (coord_bytes + offset_bytes > left) throw FormatError("offsets", "file too short for the declared n");
  if (coord_bytes + offset_bytes + 2 * m * 4 > left)
    throw FormatError("neighbors", "file too short for the declared m");

  std::vector<PolarPoint> coords;
  coords.reserve(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    PolarPoint p;
    p.radius = get<double>(in, "coords");
    p.angle = get<double>(in, "coords");
    if (!(p.radius >= 0.0 && p.radius <= params.R))
      throw FormatError("coords", "radius of vertex " + std::to_string(v) + " outside [0, R]");
    if (!(p.angle >= 0.0 && p.angle < kTwoPi))
      throw FormatError("coords", "angle of vertex " + std::to_string(v) + " outside [0, 2pi)");
    coords.push_back(p);
  }

  std::vector<std::uint64_t> offsets(n + 1);
  for (auto& off : offsets) off = get<std::uint64_t>(in, "offsets");
  if (offsets.back() != 2 * m) throw FormatError("offsets", "offset[n] != 2m");

  std::vector<Vertex> neighbors(2 * m);
  for (auto& w : neighbors) {
    const auto raw = get<std::uint32_t>(in, "neighbors");
    if (raw >= n) throw FormatError("neighbors", "vertex id out of range");
    w = raw;
  }
  if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailer", "unexpected bytes after neighbors");

  try {
    return HrgGraph(params, std::move(coords), std::move(offsets), std::move(neighbors));
  } catch (const std::invalid_argument& e) {
    throw FormatError("adjacency", e.what());
  }
}

HrgGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_graph: cannot open " + path.string());
  return read_graph(in);
}

void write_edge_list(std::ostream& out, const HrgGraph& graph) {
  for (Vertex u = 0; u < graph.num_vertices(); ++u) {
    for (Vertex v : graph.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
  if (!out) throw std::runtime_error("write_edge_list: output stream failed");
}

void write_edge_list(const std::filesystem::path& path, const HrgGraph& graph) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("write_edge_list: cannot open " + path.string());
  write_edge_list(out, graph);
}

}  // namespace hrg
