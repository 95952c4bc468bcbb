#pragma once

#include "blowup/coloring.hpp"
#include "blowup/constructions.hpp"
#include "helpers.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace testing {

/// Random normalized witness with |F| <= max_n, palette <= max_k, d <= max_d.
/// With `bounded`, edges are dropped until every color degree is <= d.
inline blowup::Witness random_witness(std::mt19937_64& rng, std::size_t max_n, std::size_t max_k,
                                      std::size_t max_d, bool bounded)
{
    using namespace blowup;
    const std::size_t d = uniform(rng, 0, max_d);
    const std::size_t k = uniform(rng, d + 1, std::max(d + 1, max_k));
    const std::size_t n = uniform(rng, 1, max_n);
    std::vector<std::vector<Color>> lists(n);
    std::vector<Color> palette(k);
    std::iota(palette.begin(), palette.end(), 0);
    for (auto& l : lists) {
        std::shuffle(palette.begin(), palette.end(), rng);
        l.assign(palette.begin(), palette.begin() + static_cast<std::ptrdiff_t>(d + 1));
    }
    std::vector<Edge> edges = random_graph(rng, n, 0.3 + 0.6 * unit(rng)).edges();
    const ListAssignment L(lists);
    if (bounded) {
        std::shuffle(edges.begin(), edges.end(), rng);
        std::vector<Edge> kept;
        for (const Edge& e : edges) {
            kept.push_back(e);
            if (max_color_degree(Graph::from_edges(n, kept), L) > d)
                kept.pop_back();
        }
        edges = std::move(kept);
    }
    return normalize_witness(Witness::make(Graph::from_edges(n, edges), L, d));
}

} // namespace testing
