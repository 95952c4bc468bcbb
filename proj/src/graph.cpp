#include "blowup/graph.hpp"

#include "blowup/error.hpp"

#include <algorithm>
#include <string>

namespace blowup {

Graph::Graph(std::size_t n)
    : n_(n),
      words_per_row_(Bitset::word_count(n)),
      adjacency_(n * Bitset::word_count(n), Word{0}),
      degrees_(n, 0)
{
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return std::move(b).build();
}

Graph Graph::complete(std::size_t n)
{
    GraphBuilder b(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return std::move(b).build();
}

Graph Graph::cycle(std::size_t n)
{
    if (n < 3)
        throw InvalidParameter("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (std::size_t v = 0; v < n; ++v)
        b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
    return std::move(b).build();
}

Graph Graph::path(std::size_t n)
{
    GraphBuilder b(n);
    for (std::size_t v = 0; v + 1 < n; ++v)
        b.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(v + 1));
    return std::move(b).build();
}

std::vector<Vertex> Graph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    out.reserve(degree(v));
    for_each_neighbor(v, [&](Vertex u) { out.push_back(u); });
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < n_; ++u)
        for_each_neighbor(static_cast<Vertex>(u), [&](Vertex v) {
            if (static_cast<std::size_t>(v) > u)
                out.emplace_back(static_cast<Vertex>(u), v);
        });
    return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const
{
    if (!labels.empty() && labels.size() != n_)
        throw InvalidParameter("label count " + std::to_string(labels.size()) +
                               " does not match vertex count " + std::to_string(n_));
    Graph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

GraphBuilder::GraphBuilder(std::size_t n) : graph_(n) {}

void GraphBuilder::add_edge(Vertex u, Vertex v)
{
    if (!graph_.contains(u) || !graph_.contains(v))
        throw InvalidParameter("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                               ") has an endpoint outside [0, " + std::to_string(graph_.n_) + ")");
    if (u == v)
        throw InvalidParameter("self-loop at vertex " + std::to_string(u));
    if (graph_.adjacent(u, v))
        return;
    const std::size_t w = graph_.words_per_row_;
    const auto su = static_cast<std::size_t>(u);
    const auto sv = static_cast<std::size_t>(v);
    graph_.adjacency_[su * w + sv / kernels::word_bits] |= Graph::Word{1} << (sv % kernels::word_bits);
    graph_.adjacency_[sv * w + su / kernels::word_bits] |= Graph::Word{1} << (su % kernels::word_bits);
    ++graph_.degrees_[su];
    ++graph_.degrees_[sv];
    ++graph_.edge_count_;
}

void GraphBuilder::set_labels(std::vector<std::string> labels)
{
    graph_ = graph_.with_labels(std::move(labels));
}

Graph GraphBuilder::build() && { return std::move(graph_); }

ProductView strong_product(const Graph& g, std::size_t t)
{
    if (t < 1)
        throw InvalidParameter("strong product fiber size must be >= 1, got " + std::to_string(t));
    const std::size_t n = g.order();
    GraphBuilder b(n * t);
    auto idx = [t](std::size_t v, std::size_t i) { return static_cast<Vertex>(v * t + i); };
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j)
                b.add_edge(idx(v, i), idx(v, j));
    for (auto [u, v] : g.edges())
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j)
                b.add_edge(idx(static_cast<std::size_t>(u), i), idx(static_cast<std::size_t>(v), j));

    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        labels.reserve(n * t);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t i = 0; i < t; ++i)
                labels.push_back(g.labels()[v] + "/" + std::to_string(i));
        b.set_labels(std::move(labels));
    }
    return ProductView(g, std::move(b).build(), t);
}

Graph join(std::span<const Graph> parts)
{
    if (parts.empty())
        throw InvalidParameter("join of an empty list of graphs");
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (const Graph& p : parts) {
        offset.push_back(total);
        total += p.order();
    }
    GraphBuilder b(total);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto base = static_cast<Vertex>(offset[k]);
        for (auto [u, v] : parts[k].edges())
            b.add_edge(base + u, base + v);
        const std::size_t end = offset[k] + parts[k].order();
        for (std::size_t u = offset[k]; u < end; ++u)
            for (std::size_t v = end; v < total; ++v)
                b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return std::move(b).build();
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep)
{
    std::vector<bool> kept(g.order(), false);
    for (Vertex v : keep) {
        if (!g.contains(v))
            throw InvalidParameter("induced_subgraph: vertex " + std::to_string(v) +
                                   " outside [0, " + std::to_string(g.order()) + ")");
        kept[static_cast<std::size_t>(v)] = true;
    }
    InducedSubgraph out;
    out.index_map.assign(g.order(), std::nullopt);
    std::vector<Vertex> survivors;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (kept[v]) {
            out.index_map[v] = static_cast<Vertex>(survivors.size());
            survivors.push_back(static_cast<Vertex>(v));
        }
    GraphBuilder b(survivors.size());
    for (std::size_t a = 0; a < survivors.size(); ++a)
        for (std::size_t c = a + 1; c < survivors.size(); ++c)
            if (g.adjacent(survivors[a], survivors[c]))
                b.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(c));
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (Vertex v : survivors)
            labels.push_back(g.labels()[static_cast<std::size_t>(v)]);
        b.set_labels(std::move(labels));
    }
    out.graph = std::move(b).build();
    return out;
}

std::size_t max_degree(const Graph& g) noexcept
{
    std::size_t best = 0;
    for (std::size_t v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(static_cast<Vertex>(v)));
    return best;
}

bool is_well_formed(const Graph& g)
{
    const std::size_t n = g.order();
    std::size_t degree_sum = 0;
    for (std::size_t u = 0; u < n; ++u) {
        const auto vu = static_cast<Vertex>(u);
        if (g.adjacent(vu, vu))
            return false;
        // Padding bits beyond n must stay clear.
        std::size_t count = 0;
        bool out_of_range = false;
        Bitset::for_each_bit(g.row(vu), [&](std::size_t v) {
            if (v >= n)
                out_of_range = true;
            else
                ++count;
        });
        if (out_of_range || count != g.degree(vu))
            return false;
        for (std::size_t v = 0; v < n; ++v)
            if (g.adjacent(vu, static_cast<Vertex>(v)) != g.adjacent(static_cast<Vertex>(v), vu))
                return false;
        degree_sum += count;
    }
    return degree_sum == 2 * g.edge_count();
}

} // namespace blowup
