#pragma once

#include "blowup/bitset.hpp"
#include "blowup/kernels.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace blowup {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

/// Finite simple undirected graph on vertices [0, n), stored as one
/// adjacency bit row per vertex. Immutable once built.
class Graph {
public:
    using Word = kernels::Word;

    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    /// Throws InvalidParameter on self-loops or out-of-range endpoints.
    /// Duplicate edges are idempotent.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph complete(std::size_t n);
    static Graph cycle(std::size_t n);
    static Graph path(std::size_t n);

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t words_per_row() const noexcept { return words_per_row_; }

    bool adjacent(Vertex u, Vertex v) const noexcept
    {
        return (row(u)[static_cast<std::size_t>(v) / kernels::word_bits] >>
                (static_cast<std::size_t>(v) % kernels::word_bits)) & 1u;
    }

    std::span<const Word> row(Vertex v) const noexcept
    {
        return {adjacency_.data() + static_cast<std::size_t>(v) * words_per_row_, words_per_row_};
    }

    std::size_t degree(Vertex v) const noexcept { return degrees_[static_cast<std::size_t>(v)]; }
    std::vector<Vertex> neighbors(Vertex v) const;

    template <class F>
    void for_each_neighbor(Vertex v, F&& f) const
    {
        Bitset::for_each_bit(row(v), [&](std::size_t u) { f(static_cast<Vertex>(u)); });
    }

    /// Edges as (u, v) with u < v in ascending lexicographic order.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;

    bool contains(Vertex v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < n_; }

    friend bool operator==(const Graph& a, const Graph& b) noexcept
    {
        return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
    }

private:
    friend class GraphBuilder;

    std::size_t n_ = 0;
    std::size_t words_per_row_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<Word> adjacency_;
    std::vector<std::size_t> degrees_;
    std::vector<std::string> labels_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n);

    std::size_t order() const noexcept { return graph_.n_; }
    void add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const noexcept { return graph_.adjacent(u, v); }
    void set_labels(std::vector<std::string> labels);

    Graph build() &&;

private:
    Graph graph_;
};

/// G ⊠ K_t together with the index bijection (v, i) <-> v * t + i.
class ProductView {
public:
    ProductView(Graph base, Graph product, std::size_t t)
        : base_(std::move(base)), product_(std::move(product)), t_(t) {}

    const Graph& base() const noexcept { return base_; }
    const Graph& product() const noexcept { return product_; }
    std::size_t fiber_size() const noexcept { return t_; }

    Vertex from_pair(Vertex v, std::size_t slot) const noexcept
    {
        return static_cast<Vertex>(static_cast<std::size_t>(v) * t_ + slot);
    }
    std::pair<Vertex, std::size_t> to_pair(Vertex p) const noexcept
    {
        const auto idx = static_cast<std::size_t>(p);
        return {static_cast<Vertex>(idx / t_), idx % t_};
    }

private:
    Graph base_;
    Graph product_;
    std::size_t t_;
};

/// Strong product with a clique: (u,i) ~ (v,j) iff (u == v and i != j) or u ~ v.
/// Throws InvalidParameter when t < 1.
ProductView strong_product(const Graph& g, std::size_t t);

/// Disjoint union plus all cross-part edges, parts concatenated in order.
/// Throws InvalidParameter on an empty list.
Graph join(std::span<const Graph> parts);

struct InducedSubgraph {
    Graph graph;
    /// old index -> new index, nullopt for dropped vertices.
    std::vector<std::optional<Vertex>> index_map;
};

/// Keeps `keep` (any order, duplicates ignored); survivors are renumbered
/// densely in ascending original order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

std::size_t max_degree(const Graph& g) noexcept;

/// Checks the Graph invariants from scratch (irreflexive, symmetric, cached
/// degrees and edge count consistent). Used by tests.
bool is_well_formed(const Graph& g);

} // namespace blowup
