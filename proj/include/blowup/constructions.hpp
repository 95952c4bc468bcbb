#pragma once

// Explicit constructions relating chi(G) and chi^d(G ⊠ K_{d+1}):
//
//  * the counterexample graph built from a list-coloring witness (F, L, d),
//    together with its d-defective coloring of G ⊠ K_{d+1};
//  * lifting a proper coloring of G to G ⊠ K_t;
//  * the join-of-copies amplification with block-stretched colorings;
//  * extraction of a proper coloring of G from a d-defective coloring of
//    G ⊠ K_d through an independent transversal, giving chi <= 2 chi^d.

#include "blowup/coloring.hpp"
#include "blowup/graph.hpp"
#include "blowup/solvers.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace blowup {

/// A graph F with lists L and defect parameter d. `k` is always the size of
/// the union of the lists.
struct Witness {
    Graph F;
    ListAssignment lists;
    std::size_t d = 0;
    std::size_t k = 0;

    /// Throws InvalidWitness when the list count differs from |V(F)|.
    static Witness make(Graph F, ListAssignment lists, std::size_t d);
};

/// Every list has exactly d + 1 colors and the union is {0, ..., k-1}.
bool is_normalized(const Witness& w);

/// Keeps the d + 1 smallest colors of each list, then renames the surviving
/// colors densely in ascending order. Throws InvalidWitness naming the first
/// vertex whose list is shorter than d + 1.
Witness normalize_witness(const Witness& w);

/// G = F plus a clique v_0..v_{k-1}, with u ~ v_t iff t is not in L(u).
/// F's vertices keep indices 0..|F|-1; clique vertex v_t is |F| + t.
struct CounterexampleBundle {
    Graph G;
    std::size_t f_order = 0;
    std::size_t k = 0;
    std::size_t d = 0;

    Vertex clique_vertex(std::size_t t) const noexcept { return static_cast<Vertex>(f_order + t); }
    bool is_clique_vertex(Vertex v) const noexcept { return static_cast<std::size_t>(v) >= f_order; }
};

/// Throws InvalidWitness unless w is normalized.
CounterexampleBundle build_counterexample(const Witness& w);

/// Coloring of G ⊠ K_{d+1}: slot i of an F-vertex v gets the i-th smallest
/// color of L(v); every slot of v_t gets t. It is d-defective whenever the
/// maximum color degree of (F, L) is at most d.
Coloring defective_coloring_cd(const Witness& w, const CounterexampleBundle& b);

/// (v, i) -> c(v) on G ⊠ K_t. Throws InvalidParameter if c is not proper.
Coloring lift_proper_to_defective(const Graph& g, const Coloring& c, std::size_t t);

/// 0-based block of slot i when d + 1 slots are grouped into delta + 1 runs of
/// equal length. Requires (delta + 1) | (d + 1).
std::size_t block_index(std::size_t slot, std::size_t d, std::size_t delta);

struct JoinLift {
    Graph joined;
    Coloring coloring; ///< on strong_product(joined, d + 1)
    std::size_t block_width = 0; ///< r: colors reserved per copy
};

/// Joins m copies of g0 and stretches a delta-defective coloring c0 of
/// g0 ⊠ K_{delta+1} to a d-defective coloring of the join ⊠ K_{d+1}: copy t
/// uses c0 shifted by r * t, and slot i reads base slot block_index(i).
/// r is one more than the largest color of c0.
JoinLift corollary_join_lift(const Graph& g0, const Coloring& c0, std::size_t delta, std::size_t m,
                             std::size_t d);

struct Extraction {
    Coloring coloring;              ///< proper on g, colors 2 * c(g, i) + layer
    Graph auxiliary;                ///< H on V(g) x [d] x {0, 1}
    std::size_t auxiliary_max_degree = 0;
    std::vector<Vertex> transversal; ///< one H-vertex per fiber, fiber order
};

/// Index of (v, slot, layer) in the auxiliary graph; fibers are contiguous
/// blocks of 2d vertices.
inline Vertex auxiliary_index(Vertex v, std::size_t slot, std::size_t layer, std::size_t d) noexcept
{
    return static_cast<Vertex>((static_cast<std::size_t>(v) * d + slot) * 2 + layer);
}

/// Requires d >= 1 and c a d-defective coloring of g ⊠ K_d (InvalidParameter
/// otherwise). Throws InternalError if the guaranteed transversal is not found.
Extraction extract_proper_from_defective(const Graph& g, std::size_t d, const Coloring& c,
                                         const Budget& budget = {});

/// Palette size of the list-coloring witnesses used for the counterexample:
/// 2d^3 + 2d^2 + d + 3.
std::uint64_t witness_palette_size(std::uint64_t d) noexcept;

} // namespace blowup
