#pragma once

#include "blowup/graph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace blowup {

using Color = int;

/// Total map vertex -> non-negative color id. The palette size is derived
/// from the map on construction.
class Coloring {
public:
    Coloring() = default;
    /// Throws InvalidParameter on negative colors.
    explicit Coloring(std::vector<Color> colors);

    std::size_t size() const noexcept { return colors_.size(); }
    Color operator[](Vertex v) const noexcept { return colors_[static_cast<std::size_t>(v)]; }
    const std::vector<Color>& colors() const noexcept { return colors_; }

    std::size_t palette_size() const noexcept { return palette_.size(); }
    /// Distinct colors in ascending order.
    const std::vector<Color>& palette() const noexcept { return palette_; }

    friend bool operator==(const Coloring& a, const Coloring& b) noexcept { return a.colors_ == b.colors_; }

private:
    std::vector<Color> colors_;
    std::vector<Color> palette_;
};

/// Per-vertex color lists, kept in the order given. Lists are sets: a
/// duplicate color within one list is rejected.
class ListAssignment {
public:
    ListAssignment() = default;
    /// Throws InvalidParameter on negative colors or duplicates within a list.
    explicit ListAssignment(std::vector<std::vector<Color>> lists);

    std::size_t size() const noexcept { return lists_.size(); }
    std::span<const Color> list(Vertex v) const noexcept { return lists_[static_cast<std::size_t>(v)]; }
    const std::vector<std::vector<Color>>& lists() const noexcept { return lists_; }
    bool contains(Vertex v, Color c) const noexcept;

    /// Union of all lists, ascending.
    std::vector<Color> palette() const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

private:
    std::vector<std::vector<Color>> lists_;
};

// All checks throw InvalidParameter when the coloring or list assignment is
// not total on g (size mismatch).

bool is_proper(const Graph& g, const Coloring& c);

/// Maximum over v of the number of neighbors sharing v's color.
std::size_t defect(const Graph& g, const Coloring& c);

bool is_d_defective(const Graph& g, const Coloring& c, std::size_t d);

/// Number of neighbors u of v with alpha in L(u). Requires alpha in L(v).
std::size_t color_degree(const Graph& g, const ListAssignment& lists, Vertex v, Color alpha);

/// Maximum color degree over all v and alpha in L(v); 0 when there is none.
std::size_t max_color_degree(const Graph& g, const ListAssignment& lists);

bool is_L_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c);

} // namespace blowup
