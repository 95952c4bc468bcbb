#pragma once

#include "blowup/graph.hpp"
#include "blowup/solvers.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace blowup {

/// Ordered partition of [0, n) into non-empty, pairwise disjoint parts.
class VertexPartition {
public:
    VertexPartition() = default;
    /// Throws InvalidParameter unless the parts partition [0, host_order).
    VertexPartition(std::size_t host_order, std::vector<std::vector<Vertex>> parts);

    /// Consecutive blocks {0..s-1}, {s..2s-1}, ... of a graph with n = s * count.
    static VertexPartition contiguous(std::size_t part_size, std::size_t count);

    std::size_t host_order() const noexcept { return host_order_; }
    std::size_t size() const noexcept { return parts_.size(); }
    const std::vector<Vertex>& part(std::size_t i) const noexcept { return parts_[i]; }
    const std::vector<std::vector<Vertex>>& parts() const noexcept { return parts_; }

private:
    std::size_t host_order_ = 0;
    std::vector<std::vector<Vertex>> parts_;
};

/// Every part has at least 2 * max_degree(h) vertices.
/// Throws InvalidParameter if p does not partition h's vertices.
bool haxell_condition(const Graph& h, const VertexPartition& p);

enum class TransversalStatus { found, none, timed_out };

struct TransversalResult {
    TransversalStatus status = TransversalStatus::none;
    /// vertices[i] is the representative of part i (only when found).
    std::vector<Vertex> vertices;
    std::uint64_t nodes_explored = 0;
};

/// Exhaustive backtracking: parts visited by ascending size (stable), members
/// by ascending index, a candidate pruned when adjacent to a chosen vertex.
TransversalResult find_independent_transversal(const Graph& h, const VertexPartition& p,
                                               const Budget& budget = {});

/// Exactly one vertex per part, in part order, pairwise non-adjacent.
bool is_independent_transversal(const Graph& h, const VertexPartition& p, const std::vector<Vertex>& vertices);

} // namespace blowup
