#pragma once

// Canonical labeling by exhaustive relabeling, for the small graphs the scan
// enumerates. The canonical form is the relabeling whose upper-triangle
// adjacency string, read pair by pair in lexicographic order, is largest.

#include "blowup/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace blowup {

inline constexpr std::size_t max_canonical_order = 10;

/// Upper-triangle adjacency code under the identity labeling; pair (0, 1)
/// is the most significant bit.
std::uint64_t adjacency_code(const Graph& g);

/// Inverse of adjacency_code for an n-vertex graph.
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// Throws InvalidParameter when g.order() > max_canonical_order.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_graph(const Graph& g);

/// 16 hex digits of an FNV-1a hash over the order and the canonical code;
/// isomorphic graphs share an id.
std::string graph_id(const Graph& g);

/// One canonical representative per isomorphism class on n vertices,
/// ordered by descending canonical code. Practical for n <= 6.
std::vector<Graph> enumerate_graphs(std::size_t n);

} // namespace blowup
