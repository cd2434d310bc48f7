#pragma once

#include <filesystem>
#include <iosfwd>

#include "hrg/graph.hpp"

namespace hrg {

/// Binary graph format "HRG1", all fields little-endian:
///   magic "HRG1" | u64 n | u64 m | f64 alpha | f64 R | u64 seed
///   | n x (f64 radius, f64 angle) | (n+1) x u64 offsets
///   | 2m x u32 neighbors (u64 when n >= 2^32)
void write_graph(std::ostream& out, const HrgGraph& graph);
void write_graph(const std::filesystem::path& path, const HrgGraph& graph);

/// Throws FormatError naming the offending field on any malformed input.
HrgGraph read_graph(std::istream& in);
HrgGraph read_graph(const std::filesystem::path& path);

/// Plain-text edge list, one "u v" line per undirected edge with u < v, 0-indexed.
void write_edge_list(std::ostream& out, const HrgGraph& graph);
void write_edge_list(const std::filesystem::path& path, const HrgGraph& graph);

}  // namespace hrg
