#pragma once

// Exact, deterministic search procedures for chi, chi^d and list
// colorability. All return certificates that re-verify through coloring.hpp.

#include "blowup/coloring.hpp"
#include "blowup/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace blowup {

/// Search limits. Exceeding either yields a timed-out result, never a wrong
/// answer.
struct Budget {
    std::uint64_t max_nodes = 100'000'000;
    std::optional<double> max_seconds;
};

/// `value` is absent exactly when the search timed out.
template <class Value>
struct SolveResult {
    std::optional<Value> value;
    std::optional<Coloring> certificate;
    std::uint64_t nodes_explored = 0;
    bool timed_out = false;
};

using CountResult = SolveResult<std::size_t>;
using DecisionResult = SolveResult<bool>;

/// DSATUR branch-and-bound. The empty graph has chromatic number 0.
CountResult chromatic_number(const Graph& g, const Budget& budget = {});

/// Backtracking in smallest-last order with incremental monochromatic degree
/// counters, trying k = lower bound, lower bound + 1, ... until feasible.
CountResult defective_chromatic_number(const Graph& g, std::size_t d, const Budget& budget = {});

/// Decides whether a d-defective coloring with at most k colors exists.
DecisionResult is_d_defective_colorable(const Graph& g, std::size_t d, std::size_t k,
                                        const Budget& budget = {});

/// Minimum-remaining-values backtracking, ties to the lowest vertex index.
DecisionResult is_list_colorable(const Graph& g, const ListAssignment& lists, const Budget& budget = {});

/// Size of the best clique found by greedy growth from every start vertex.
/// 0 for the empty graph, 1 for a non-empty edgeless graph.
std::size_t clique_lower_bound(const Graph& g);

/// The vertices of that clique, ascending.
std::vector<Vertex> greedy_clique(const Graph& g);

/// Smallest-last (degeneracy) order: the reverse of repeatedly deleting a
/// minimum-degree vertex, ties broken by lowest index.
std::vector<Vertex> degeneracy_order(const Graph& g);

} // namespace blowup
