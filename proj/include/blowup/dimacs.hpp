#pragma once

// DIMACS .col reader/writer.
//
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        1-based endpoints, either order, duplicates allowed
//
// The writer emits a single header and edges with u < v in ascending order.

#include "blowup/graph.hpp"

#include <filesystem>
#include <iosfwd>

namespace blowup::dimacs {

/// Throws ParseError carrying the 1-based line number.
Graph read(std::istream& in);
Graph read_file(const std::filesystem::path& path);

void write(std::ostream& out, const Graph& g);
void write_file(const std::filesystem::path& path, const Graph& g);

} // namespace blowup::dimacs
