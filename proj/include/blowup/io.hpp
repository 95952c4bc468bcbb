#pragma once

// JSON file formats.
//
//   coloring:   {"n": int, "colors": [int; n]}
//   lists:      {"n": int, "lists": [[int, ...]; n]}
//   witness:    {"d": int, "F": {"n": int, "edges": [[u, v], ...]}, "lists": [[int, ...]; n]}
//   partition:  {"parts": [[int, ...], ...]}
//   transversal: [int, ...]
//
// Vertex indices in JSON are 0-based; colors are written verbatim. Readers
// throw ParseError naming the offending field.

#include "blowup/coloring.hpp"
#include "blowup/constructions.hpp"
#include "blowup/transversal.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace blowup::io {

Coloring parse_coloring(std::string_view text);
std::string format_coloring(const Coloring& c);

ListAssignment parse_lists(std::string_view text);
std::string format_lists(const ListAssignment& lists);

/// The returned witness has k recomputed from the lists.
Witness parse_witness(std::string_view text);
std::string format_witness(const Witness& w);

/// The host order is the number of listed vertices.
VertexPartition parse_partition(std::string_view text);
std::string format_transversal(const std::vector<Vertex>& vertices);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

} // namespace blowup::io
