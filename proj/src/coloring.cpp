#include "blowup/coloring.hpp"

#include "blowup/error.hpp"
#include "blowup/kernels.hpp"

#include <algorithm>
#include <string>

namespace blowup {

namespace {

void require_total(const Graph& g, std::size_t size, const char* what)
{
    if (size != g.order())
        throw InvalidParameter(std::string(what) + " covers " + std::to_string(size) +
                               " vertices but the graph has " + std::to_string(g.order()));
}

// One bit mask per distinct color, indexed by position in the palette.
std::vector<Bitset> class_masks(const Graph& g, const Coloring& c)
{
    const auto& palette = c.palette();
    std::vector<Bitset> masks(palette.size(), Bitset(g.order()));
    for (std::size_t v = 0; v < c.size(); ++v) {
        const auto it = std::lower_bound(palette.begin(), palette.end(), c.colors()[v]);
        masks[static_cast<std::size_t>(it - palette.begin())].set(v);
    }
    return masks;
}

} // namespace

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors))
{
    for (std::size_t v = 0; v < colors_.size(); ++v)
        if (colors_[v] < 0)
            throw InvalidParameter("vertex " + std::to_string(v) + " has negative color " +
                                   std::to_string(colors_[v]));
    palette_ = colors_;
    std::sort(palette_.begin(), palette_.end());
    palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());
}

ListAssignment::ListAssignment(std::vector<std::vector<Color>> lists) : lists_(std::move(lists))
{
    for (std::size_t v = 0; v < lists_.size(); ++v) {
        std::vector<Color> sorted = lists_[v];
        std::sort(sorted.begin(), sorted.end());
        if (!sorted.empty() && sorted.front() < 0)
            throw InvalidParameter("list of vertex " + std::to_string(v) + " has a negative color");
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidParameter("list of vertex " + std::to_string(v) + " repeats a color");
    }
}

bool ListAssignment::contains(Vertex v, Color c) const noexcept
{
    const auto& l = lists_[static_cast<std::size_t>(v)];
    return std::find(l.begin(), l.end(), c) != l.end();
}

std::vector<Color> ListAssignment::palette() const
{
    std::vector<Color> all;
    for (const auto& l : lists_)
        all.insert(all.end(), l.begin(), l.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

bool is_proper(const Graph& g, const Coloring& c)
{
    return defect(g, c) == 0;
}

std::size_t defect(const Graph& g, const Coloring& c)
{
    require_total(g, c.size(), "coloring");
    if (g.order() == 0)
        return 0;
    const auto masks = class_masks(g, c);
    const auto& palette = c.palette();
    std::size_t worst = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
        const auto cls = static_cast<std::size_t>(
            std::lower_bound(palette.begin(), palette.end(), c.colors()[v]) - palette.begin());
        worst = std::max(worst, kernels::and_popcount(g.row(static_cast<Vertex>(v)), masks[cls].words()));
    }
    return worst;
}

bool is_d_defective(const Graph& g, const Coloring& c, std::size_t d)
{
    return defect(g, c) <= d;
}

std::size_t color_degree(const Graph& g, const ListAssignment& lists, Vertex v, Color alpha)
{
    require_total(g, lists.size(), "list assignment");
    if (!g.contains(v))
        throw InvalidParameter("vertex " + std::to_string(v) + " out of range");
    if (!lists.contains(v, alpha))
        throw InvalidParameter("color " + std::to_string(alpha) + " is not in the list of vertex " +
                               std::to_string(v));
    std::size_t count = 0;
    g.for_each_neighbor(v, [&](Vertex u) { count += lists.contains(u, alpha) ? 1 : 0; });
    return count;
}

std::size_t max_color_degree(const Graph& g, const ListAssignment& lists)
{
    require_total(g, lists.size(), "list assignment");
    std::size_t worst = 0;
    for (Color alpha : lists.palette()) {
        Bitset holders(g.order());
        for (std::size_t v = 0; v < g.order(); ++v)
            if (lists.contains(static_cast<Vertex>(v), alpha))
                holders.set(v);
        holders.for_each([&](std::size_t v) {
            worst = std::max(worst, kernels::and_popcount(g.row(static_cast<Vertex>(v)), holders.words()));
        });
    }
    return worst;
}

bool is_L_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c)
{
    require_total(g, lists.size(), "list assignment");
    require_total(g, c.size(), "coloring");
    for (std::size_t v = 0; v < g.order(); ++v)
        if (!lists.contains(static_cast<Vertex>(v), c.colors()[v]))
            return false;
    return is_proper(g, c);
}

} // namespace blowup
