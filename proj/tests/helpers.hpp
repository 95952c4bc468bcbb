#pragma once

#include "blowup/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testing {

using blowup::Edge;
using blowup::Graph;
using blowup::Vertex;

inline Graph petersen()
{
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b)
{
    blowup::GraphBuilder gb(a + b);
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = 0; v < b; ++v)
            gb.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(a + v));
    return std::move(gb).build();
}

/// Seeded G(n, p) using raw generator bits only.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p)
{
    blowup::GraphBuilder gb(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
                gb.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return std::move(gb).build();
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace testing
