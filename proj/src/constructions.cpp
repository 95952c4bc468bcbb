#include "blowup/constructions.hpp"

#include "blowup/error.hpp"
#include "blowup/transversal.hpp"

#include <algorithm>
#include <string>

namespace blowup {

Witness Witness::make(Graph F, ListAssignment lists, std::size_t d)
{
    if (lists.size() != F.order())
        throw InvalidWitness("witness has " + std::to_string(lists.size()) + " lists for " +
                             std::to_string(F.order()) + " vertices");
    Witness w;
    w.k = lists.palette().size();
    w.F = std::move(F);
    w.lists = std::move(lists);
    w.d = d;
    return w;
}

bool is_normalized(const Witness& w)
{
    if (w.lists.size() != w.F.order())
        return false;
    for (const auto& l : w.lists.lists())
        if (l.size() != w.d + 1)
            return false;
    const auto palette = w.lists.palette();
    if (palette.size() != w.k)
        return false;
    for (std::size_t i = 0; i < palette.size(); ++i)
        if (palette[i] != static_cast<Color>(i))
            return false;
    return true;
}

Witness normalize_witness(const Witness& w)
{
    std::vector<std::vector<Color>> truncated;
    truncated.reserve(w.lists.size());
    for (std::size_t v = 0; v < w.lists.size(); ++v) {
        const auto list = w.lists.list(static_cast<Vertex>(v));
        if (list.size() < w.d + 1)
            throw InvalidWitness("vertex " + std::to_string(v) + " has a list of size " +
                                 std::to_string(list.size()) + ", fewer than d + 1 = " + std::to_string(w.d + 1));
        std::vector<Color> sorted(list.begin(), list.end());
        std::sort(sorted.begin(), sorted.end());
        sorted.resize(w.d + 1);
        truncated.push_back(std::move(sorted));
    }
    const auto palette = ListAssignment(truncated).palette();
    for (auto& l : truncated)
        for (Color& c : l)
            c = static_cast<Color>(std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
    return Witness::make(w.F, ListAssignment(std::move(truncated)), w.d);
}

CounterexampleBundle build_counterexample(const Witness& w)
{
    if (!is_normalized(w))
        throw InvalidWitness("witness is not normalized: lists must have exactly d + 1 = " +
                             std::to_string(w.d + 1) + " colors forming a dense range {0, ..., k-1}");
    const std::size_t f = w.F.order();
    GraphBuilder b(f + w.k);
    for (auto [u, v] : w.F.edges())
        b.add_edge(u, v);
    for (std::size_t s = 0; s < w.k; ++s)
        for (std::size_t t = s + 1; t < w.k; ++t)
            b.add_edge(static_cast<Vertex>(f + s), static_cast<Vertex>(f + t));
    for (std::size_t u = 0; u < f; ++u)
        for (std::size_t t = 0; t < w.k; ++t)
            if (!w.lists.contains(static_cast<Vertex>(u), static_cast<Color>(t)))
                b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(f + t));

    std::vector<std::string> labels;
    labels.reserve(f + w.k);
    for (std::size_t u = 0; u < f; ++u)
        labels.push_back("u" + std::to_string(u));
    for (std::size_t t = 0; t < w.k; ++t)
        labels.push_back("v" + std::to_string(t));
    b.set_labels(std::move(labels));

    CounterexampleBundle out;
    out.G = std::move(b).build();
    out.f_order = f;
    out.k = w.k;
    out.d = w.d;
    return out;
}

Coloring defective_coloring_cd(const Witness& w, const CounterexampleBundle& b)
{
    if (!is_normalized(w))
        throw InvalidParameter("defective_coloring_cd needs a normalized witness");
    if (b.f_order != w.F.order() || b.k != w.k || b.d != w.d || b.G.order() != b.f_order + b.k)
        throw InvalidParameter("counterexample bundle was not built from this witness");
    const std::size_t t = w.d + 1;
    std::vector<Color> colors(b.G.order() * t);
    for (std::size_t v = 0; v < b.f_order; ++v) {
        const auto list = w.lists.list(static_cast<Vertex>(v));
        std::vector<Color> ascending(list.begin(), list.end());
        std::sort(ascending.begin(), ascending.end());
        for (std::size_t i = 0; i < t; ++i)
            colors[v * t + i] = ascending[i];
    }
    for (std::size_t s = 0; s < b.k; ++s)
        for (std::size_t i = 0; i < t; ++i)
            colors[(b.f_order + s) * t + i] = static_cast<Color>(s);
    return Coloring(std::move(colors));
}

Coloring lift_proper_to_defective(const Graph& g, const Coloring& c, std::size_t t)
{
    if (t < 1)
        throw InvalidParameter("fiber size must be >= 1");
    if (!is_proper(g, c))
        throw InvalidParameter("lift_proper_to_defective needs a proper coloring");
    std::vector<Color> colors;
    colors.reserve(g.order() * t);
    for (Color col : c.colors())
        colors.insert(colors.end(), t, col);
    return Coloring(std::move(colors));
}

std::size_t block_index(std::size_t slot, std::size_t d, std::size_t delta)
{
    if ((d + 1) % (delta + 1) != 0)
        throw InvalidParameter("delta + 1 = " + std::to_string(delta + 1) + " does not divide d + 1 = " +
                               std::to_string(d + 1));
    if (slot > d)
        throw InvalidParameter("slot " + std::to_string(slot) + " outside [0, " + std::to_string(d) + "]");
    return slot / ((d + 1) / (delta + 1));
}

JoinLift corollary_join_lift(const Graph& g0, const Coloring& c0, std::size_t delta, std::size_t m,
                             std::size_t d)
{
    if (m < 1)
        throw InvalidParameter("join needs at least one copy");
    if ((d + 1) % (delta + 1) != 0)
        throw InvalidParameter("delta + 1 = " + std::to_string(delta + 1) + " does not divide d + 1 = " +
                               std::to_string(d + 1));
    const std::size_t base_t = delta + 1;
    if (c0.size() != g0.order() * base_t)
        throw InvalidParameter("base coloring has " + std::to_string(c0.size()) + " entries, expected " +
                               std::to_string(g0.order() * base_t));
    const std::size_t base_defect = defect(strong_product(g0, base_t).product(), c0);
    if (base_defect > delta)
        throw InvalidParameter("base coloring has defect " + std::to_string(base_defect) + " > delta = " +
                               std::to_string(delta));

    JoinLift out;
    const std::vector<Graph> copies(m, g0);
    out.joined = join(copies);
    out.block_width = c0.palette().empty() ? 0 : static_cast<std::size_t>(c0.palette().back()) + 1;

    const std::size_t n0 = g0.order();
    const std::size_t t = d + 1;
    std::vector<Color> colors(out.joined.order() * t);
    for (std::size_t copy = 0; copy < m; ++copy)
        for (std::size_t v = 0; v < n0; ++v)
            for (std::size_t i = 0; i < t; ++i)
                colors[(copy * n0 + v) * t + i] =
                    c0[static_cast<Vertex>(v * base_t + block_index(i, d, delta))] +
                    static_cast<Color>(out.block_width * copy);
    out.coloring = Coloring(std::move(colors));
    return out;
}

Extraction extract_proper_from_defective(const Graph& g, std::size_t d, const Coloring& c, const Budget& budget)
{
    if (d < 1)
        throw InvalidParameter("extraction needs d >= 1");
    const std::size_t n = g.order();
    if (c.size() != n * d)
        throw InvalidParameter("coloring has " + std::to_string(c.size()) + " entries, expected |V(G)| * d = " +
                               std::to_string(n * d));
    const std::size_t observed = defect(strong_product(g, d).product(), c);
    if (observed > d)
        throw InvalidParameter("coloring has defect " + std::to_string(observed) + " > d = " + std::to_string(d));

    auto color_of = [&](Vertex v, std::size_t slot) { return c[static_cast<Vertex>(static_cast<std::size_t>(v) * d + slot)]; };

    GraphBuilder h(n * d * 2);
    for (auto [u, v] : g.edges())
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (color_of(u, i) == color_of(v, j))
                    for (std::size_t layer = 0; layer < 2; ++layer)
                        h.add_edge(auxiliary_index(u, i, layer, d), auxiliary_index(v, j, layer, d));

    Extraction out;
    out.auxiliary = std::move(h).build();
    out.auxiliary_max_degree = max_degree(out.auxiliary);
    if (out.auxiliary_max_degree > d)
        throw InternalError("auxiliary graph has maximum degree " + std::to_string(out.auxiliary_max_degree) +
                            " > d for a d-defective input");

    const auto fibers = VertexPartition::contiguous(2 * d, n);
    const auto found = find_independent_transversal(out.auxiliary, fibers, budget);
    if (found.status != TransversalStatus::found)
        throw InternalError(found.status == TransversalStatus::none
                                ? "no independent transversal although every fiber has 2d >= 2 max degree"
                                : "independent transversal search exhausted its budget");
    out.transversal = found.vertices;

    std::vector<Color> colors(n);
    for (std::size_t v = 0; v < n; ++v) {
        const auto local = static_cast<std::size_t>(found.vertices[v]) - v * 2 * d;
        const std::size_t slot = local / 2;
        const std::size_t layer = local % 2;
        colors[v] = 2 * color_of(static_cast<Vertex>(v), slot) + static_cast<Color>(layer);
    }
    out.coloring = Coloring(std::move(colors));
    if (!is_proper(g, out.coloring))
        throw InternalError("extracted coloring is not proper");
    return out;
}

std::uint64_t witness_palette_size(std::uint64_t d) noexcept
{
    return 2 * d * d * d + 2 * d * d + d + 3;
}

} // namespace blowup
