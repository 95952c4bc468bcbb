#include "blowup/solvers.hpp"

#include "blowup/error.hpp"
#include "blowup/kernels.hpp"
#include "search_budget.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace blowup {

namespace {

using detail::BudgetExhausted;
using detail::NodeCounter;

// Exact DSATUR branch-and-bound over proper colorings.
class DsaturSearch {
public:
    DsaturSearch(const Graph& g, NodeCounter& counter)
        : g_(g),
          n_(g.order()),
          counter_(counter),
          color_(n_, -1),
          neighbor_color_count_(n_ * (n_ + 1), 0),
          saturation_(n_, 0)
    {
    }

    void run(std::size_t lower_bound)
    {
        lower_bound_ = lower_bound;
        greedy();
        if (best_ > lower_bound_)
            branch(0, 0);
    }

    std::size_t best() const noexcept { return best_; }
    const std::vector<Color>& best_colors() const noexcept { return best_colors_; }

private:
    int& count(std::size_t v, std::size_t c) { return neighbor_color_count_[v * (n_ + 1) + c]; }

    void assign(Vertex v, std::size_t c)
    {
        color_[static_cast<std::size_t>(v)] = static_cast<Color>(c);
        g_.for_each_neighbor(v, [&](Vertex u) {
            if (count(static_cast<std::size_t>(u), c)++ == 0)
                ++saturation_[static_cast<std::size_t>(u)];
        });
    }

    void unassign(Vertex v, std::size_t c)
    {
        color_[static_cast<std::size_t>(v)] = -1;
        g_.for_each_neighbor(v, [&](Vertex u) {
            if (--count(static_cast<std::size_t>(u), c) == 0)
                --saturation_[static_cast<std::size_t>(u)];
        });
    }

    // Highest saturation, then highest degree, then lowest index.
    Vertex pick() const
    {
        Vertex best = -1;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] >= 0)
                continue;
            if (best < 0) {
                best = static_cast<Vertex>(v);
                continue;
            }
            const auto b = static_cast<std::size_t>(best);
            if (saturation_[v] > saturation_[b] ||
                (saturation_[v] == saturation_[b] && g_.degree(static_cast<Vertex>(v)) > g_.degree(best)))
                best = static_cast<Vertex>(v);
        }
        return best;
    }

    void greedy()
    {
        std::size_t used = 0;
        std::vector<std::pair<Vertex, std::size_t>> trail;
        for (std::size_t step = 0; step < n_; ++step) {
            const Vertex v = pick();
            std::size_t c = 0;
            while (count(static_cast<std::size_t>(v), c) != 0)
                ++c;
            assign(v, c);
            trail.emplace_back(v, c);
            used = std::max(used, c + 1);
        }
        best_ = used;
        best_colors_ = color_;
        for (auto it = trail.rbegin(); it != trail.rend(); ++it)
            unassign(it->first, it->second);
    }

    void branch(std::size_t colored, std::size_t used)
    {
        counter_.tick();
        if (colored == n_) {
            if (used < best_) {
                best_ = used;
                best_colors_ = color_;
            }
            return;
        }
        const Vertex v = pick();
        const auto sv = static_cast<std::size_t>(v);
        for (std::size_t c = 0; c <= used && best_ > lower_bound_; ++c) {
            const std::size_t next_used = std::max(used, c + 1);
            if (next_used >= best_)
                break;
            if (count(sv, c) != 0)
                continue;
            assign(v, c);
            branch(colored + 1, next_used);
            unassign(v, c);
        }
    }

    const Graph& g_;
    std::size_t n_;
    NodeCounter& counter_;
    std::vector<Color> color_;
    std::vector<int> neighbor_color_count_;
    std::vector<int> saturation_;
    std::size_t lower_bound_ = 0;
    std::size_t best_ = 0;
    std::vector<Color> best_colors_;
};

// Decision search for a d-defective coloring with at most k colors.
//
// Two symmetry reductions hold simultaneously for the lexicographically least
// coloring (along the static order) in every orbit, so both are complete:
// a vertex may open at most one new color, and a vertex whose twin (equal
// open neighborhoods apart from each other) comes earlier in the order takes
// a color no smaller than that twin's.
class DefectiveSearch {
public:
    DefectiveSearch(const Graph& g, std::size_t d, std::size_t k, NodeCounter& counter)
        : g_(g),
          d_(d),
          k_(k),
          counter_(counter),
          order_(degeneracy_order(g)),
          color_(g.order(), -1),
          mono_(g.order(), 0),
          masks_(k, Bitset(g.order())),
          scratch_(g.order()),
          twin_before_(g.order(), -1)
    {
        for (std::size_t p = 0; p < order_.size(); ++p) {
            const Vertex v = order_[p];
            for (std::size_t q = p; q-- > 0;) {
                if (are_twins(order_[q], v)) {
                    twin_before_[static_cast<std::size_t>(v)] = order_[q];
                    break;
                }
            }
        }
    }

    bool run() { return branch(0, 0); }

    const std::vector<Color>& colors() const noexcept { return color_; }

private:
    bool are_twins(Vertex a, Vertex b) const
    {
        const auto ra = g_.row(a);
        const auto rb = g_.row(b);
        const auto sa = static_cast<std::size_t>(a);
        const auto sb = static_cast<std::size_t>(b);
        for (std::size_t w = 0; w < ra.size(); ++w) {
            Graph::Word x = ra[w];
            Graph::Word y = rb[w];
            if (w == sb / kernels::word_bits)
                x &= ~(Graph::Word{1} << (sb % kernels::word_bits));
            if (w == sa / kernels::word_bits)
                y &= ~(Graph::Word{1} << (sa % kernels::word_bits));
            if (x != y)
                return false;
        }
        return true;
    }

    bool branch(std::size_t pos, std::size_t used)
    {
        counter_.tick();
        if (pos == order_.size())
            return true;
        const Vertex v = order_[pos];
        const auto sv = static_cast<std::size_t>(v);
        const auto row = g_.row(v);
        std::size_t first = 0;
        if (const Vertex t = twin_before_[sv]; t >= 0)
            first = static_cast<std::size_t>(color_[static_cast<std::size_t>(t)]);
        const std::size_t last = std::min(used, k_ - 1);
        for (std::size_t c = first; c <= last; ++c) {
            const std::size_t same = kernels::and_popcount(row, masks_[c].words());
            if (same > d_)
                continue;
            kernels::and_into(scratch_.words(), row, masks_[c].words());
            bool ok = true;
            scratch_.for_each([&](std::size_t u) { ok = ok && mono_[u] < d_; });
            if (!ok)
                continue;

            std::vector<std::size_t> touched;
            touched.reserve(same);
            scratch_.for_each([&](std::size_t u) { touched.push_back(u); });
            for (std::size_t u : touched)
                ++mono_[u];
            mono_[sv] = same;
            color_[sv] = static_cast<Color>(c);
            masks_[c].set(sv);

            if (branch(pos + 1, std::max(used, c + 1)))
                return true;

            masks_[c].reset(sv);
            color_[sv] = -1;
            mono_[sv] = 0;
            for (std::size_t u : touched)
                --mono_[u];
        }
        return false;
    }

    const Graph& g_;
    std::size_t d_;
    std::size_t k_;
    NodeCounter& counter_;
    std::vector<Vertex> order_;
    std::vector<Color> color_;
    std::vector<std::size_t> mono_;
    std::vector<Bitset> masks_;
    Bitset scratch_;
    std::vector<Vertex> twin_before_;
};

class ListSearch {
public:
    ListSearch(const Graph& g, const ListAssignment& lists, NodeCounter& counter)
        : g_(g), counter_(counter), color_(g.order(), -1)
    {
        for (const auto& l : lists.lists()) {
            sorted_.push_back(l);
            std::sort(sorted_.back().begin(), sorted_.back().end());
        }
    }

    bool run() { return branch(0); }

    const std::vector<Color>& colors() const noexcept { return color_; }

private:
    bool available(Vertex v, Color c) const
    {
        bool free = true;
        g_.for_each_neighbor(v, [&](Vertex u) { free = free && color_[static_cast<std::size_t>(u)] != c; });
        return free;
    }

    std::size_t options(Vertex v) const
    {
        std::size_t count = 0;
        for (Color c : sorted_[static_cast<std::size_t>(v)])
            count += available(v, c) ? 1 : 0;
        return count;
    }

    bool branch(std::size_t colored)
    {
        counter_.tick();
        if (colored == g_.order())
            return true;
        Vertex pick = -1;
        std::size_t fewest = 0;
        for (std::size_t v = 0; v < g_.order(); ++v) {
            if (color_[v] >= 0)
                continue;
            const std::size_t opts = options(static_cast<Vertex>(v));
            if (opts == 0)
                return false;
            if (pick < 0 || opts < fewest) {
                pick = static_cast<Vertex>(v);
                fewest = opts;
            }
        }
        const auto sp = static_cast<std::size_t>(pick);
        for (Color c : sorted_[sp]) {
            if (!available(pick, c))
                continue;
            color_[sp] = c;
            if (branch(colored + 1))
                return true;
            color_[sp] = -1;
        }
        return false;
    }

    const Graph& g_;
    NodeCounter& counter_;
    std::vector<std::vector<Color>> sorted_;
    std::vector<Color> color_;
};

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

} // namespace

std::vector<Vertex> greedy_clique(const Graph& g)
{
    std::vector<Vertex> best;
    Bitset candidates(g.order());
    for (std::size_t start = 0; start < g.order(); ++start) {
        std::vector<Vertex> clique{static_cast<Vertex>(start)};
        kernels::and_into(candidates.words(), g.row(static_cast<Vertex>(start)), g.row(static_cast<Vertex>(start)));
        while (candidates.any()) {
            Vertex pick = -1;
            std::size_t pick_score = 0;
            candidates.for_each([&](std::size_t v) {
                const std::size_t score = kernels::and_popcount(g.row(static_cast<Vertex>(v)), candidates.words());
                if (pick < 0 || score > pick_score) {
                    pick = static_cast<Vertex>(v);
                    pick_score = score;
                }
            });
            clique.push_back(pick);
            kernels::and_into(candidates.words(), candidates.words(), g.row(pick));
        }
        if (clique.size() > best.size())
            best = std::move(clique);
    }
    std::sort(best.begin(), best.end());
    return best;
}

std::size_t clique_lower_bound(const Graph& g)
{
    return greedy_clique(g).size();
}

std::vector<Vertex> degeneracy_order(const Graph& g)
{
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(n);
    std::vector<bool> removed(n, false);
    for (std::size_t v = 0; v < n; ++v)
        deg[v] = g.degree(static_cast<Vertex>(v));
    std::vector<Vertex> removal;
    removal.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (pick == n || deg[v] < deg[pick]))
                pick = v;
        removed[pick] = true;
        removal.push_back(static_cast<Vertex>(pick));
        g.for_each_neighbor(static_cast<Vertex>(pick), [&](Vertex u) {
            if (!removed[static_cast<std::size_t>(u)])
                --deg[static_cast<std::size_t>(u)];
        });
    }
    return {removal.rbegin(), removal.rend()};
}

CountResult chromatic_number(const Graph& g, const Budget& budget)
{
    CountResult result;
    if (g.order() == 0) {
        result.value = 0;
        result.certificate = Coloring{};
        return result;
    }
    NodeCounter counter(budget);
    DsaturSearch search(g, counter);
    try {
        search.run(clique_lower_bound(g));
    } catch (const BudgetExhausted&) {
        result.timed_out = true;
        result.nodes_explored = counter.nodes();
        return result;
    }
    result.value = search.best();
    result.certificate = Coloring(search.best_colors());
    result.nodes_explored = counter.nodes();
    return result;
}

DecisionResult is_d_defective_colorable(const Graph& g, std::size_t d, std::size_t k, const Budget& budget)
{
    DecisionResult result;
    if (g.order() == 0) {
        result.value = true;
        result.certificate = Coloring{};
        return result;
    }
    if (k == 0) {
        result.value = false;
        return result;
    }
    NodeCounter counter(budget);
    DefectiveSearch search(g, d, k, counter);
    try {
        const bool found = search.run();
        result.value = found;
        if (found)
            result.certificate = Coloring(search.colors());
    } catch (const BudgetExhausted&) {
        result.timed_out = true;
    }
    result.nodes_explored = counter.nodes();
    return result;
}

CountResult defective_chromatic_number(const Graph& g, std::size_t d, const Budget& budget)
{
    CountResult result;
    if (g.order() == 0) {
        result.value = 0;
        result.certificate = Coloring{};
        return result;
    }
    // A color class inside a clique has at most d + 1 vertices.
    std::size_t k = std::max<std::size_t>(1, ceil_div(clique_lower_bound(g), d + 1));
    Budget remaining = budget;
    const auto start = std::chrono::steady_clock::now();
    for (;; ++k) {
        if (budget.max_seconds) {
            const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
            remaining.max_seconds = *budget.max_seconds - spent.count();
        }
        remaining.max_nodes = budget.max_nodes - std::min(budget.max_nodes, result.nodes_explored);
        const DecisionResult step = is_d_defective_colorable(g, d, k, remaining);
        result.nodes_explored += step.nodes_explored;
        if (step.timed_out) {
            result.timed_out = true;
            return result;
        }
        if (*step.value) {
            result.value = k;
            result.certificate = step.certificate;
            return result;
        }
        if (k >= g.order())
            throw InternalError("no d-defective coloring with n colors; search is broken");
    }
}

DecisionResult is_list_colorable(const Graph& g, const ListAssignment& lists, const Budget& budget)
{
    if (lists.size() != g.order())
        throw InvalidParameter("list assignment covers " + std::to_string(lists.size()) +
                               " vertices but the graph has " + std::to_string(g.order()));
    DecisionResult result;
    NodeCounter counter(budget);
    ListSearch search(g, lists, counter);
    try {
        const bool found = search.run();
        result.value = found;
        if (found)
            result.certificate = Coloring(search.colors());
    } catch (const BudgetExhausted&) {
        result.timed_out = true;
    }
    result.nodes_explored = counter.nodes();
    return result;
}

} // namespace blowup
