#include "blowup/transversal.hpp"

#include "blowup/error.hpp"
#include "blowup/kernels.hpp"
#include "search_budget.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace blowup {

VertexPartition::VertexPartition(std::size_t host_order, std::vector<std::vector<Vertex>> parts)
    : host_order_(host_order), parts_(std::move(parts))
{
    std::vector<bool> seen(host_order, false);
    std::size_t covered = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i].empty())
            throw InvalidParameter("part " + std::to_string(i) + " is empty");
        for (Vertex v : parts_[i]) {
            if (v < 0 || static_cast<std::size_t>(v) >= host_order)
                throw InvalidParameter("part " + std::to_string(i) + " contains vertex " + std::to_string(v) +
                                       " outside [0, " + std::to_string(host_order) + ")");
            if (seen[static_cast<std::size_t>(v)])
                throw InvalidParameter("vertex " + std::to_string(v) + " appears in more than one part");
            seen[static_cast<std::size_t>(v)] = true;
            ++covered;
        }
    }
    if (covered != host_order)
        throw InvalidParameter("partition covers " + std::to_string(covered) + " of " +
                               std::to_string(host_order) + " vertices");
}

VertexPartition VertexPartition::contiguous(std::size_t part_size, std::size_t count)
{
    std::vector<std::vector<Vertex>> parts(count, std::vector<Vertex>(part_size));
    for (std::size_t i = 0; i < count; ++i)
        std::iota(parts[i].begin(), parts[i].end(), static_cast<Vertex>(i * part_size));
    return VertexPartition(part_size * count, std::move(parts));
}

namespace {

void require_host(const Graph& h, const VertexPartition& p)
{
    if (p.host_order() != h.order())
        throw InvalidParameter("partition is over " + std::to_string(p.host_order()) +
                               " vertices but the graph has " + std::to_string(h.order()));
}

class TransversalSearch {
public:
    TransversalSearch(const Graph& h, const VertexPartition& p, detail::NodeCounter& counter)
        : h_(h), counter_(counter), order_(p.size()), chosen_(h.order()), pick_(p.size(), -1)
    {
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return p.part(a).size() < p.part(b).size(); });
        for (const auto& part : p.parts()) {
            members_.push_back(part);
            std::sort(members_.back().begin(), members_.back().end());
        }
    }

    bool run() { return branch(0); }
    const std::vector<Vertex>& picks() const noexcept { return pick_; }

private:
    bool branch(std::size_t depth)
    {
        counter_.tick();
        if (depth == order_.size())
            return true;
        const std::size_t part = order_[depth];
        for (Vertex v : members_[part]) {
            if (kernels::intersects(h_.row(v), chosen_.words()))
                continue;
            chosen_.set(static_cast<std::size_t>(v));
            pick_[part] = v;
            if (branch(depth + 1))
                return true;
            chosen_.reset(static_cast<std::size_t>(v));
            pick_[part] = -1;
        }
        return false;
    }

    const Graph& h_;
    detail::NodeCounter& counter_;
    std::vector<std::size_t> order_;
    std::vector<std::vector<Vertex>> members_;
    Bitset chosen_;
    std::vector<Vertex> pick_;
};

} // namespace

bool haxell_condition(const Graph& h, const VertexPartition& p)
{
    require_host(h, p);
    const std::size_t need = 2 * max_degree(h);
    return std::all_of(p.parts().begin(), p.parts().end(),
                       [need](const std::vector<Vertex>& part) { return part.size() >= need; });
}

TransversalResult find_independent_transversal(const Graph& h, const VertexPartition& p, const Budget& budget)
{
    require_host(h, p);
    TransversalResult result;
    detail::NodeCounter counter(budget);
    TransversalSearch search(h, p, counter);
    try {
        if (search.run()) {
            result.status = TransversalStatus::found;
            result.vertices = search.picks();
        } else {
            result.status = TransversalStatus::none;
        }
    } catch (const detail::BudgetExhausted&) {
        result.status = TransversalStatus::timed_out;
    }
    result.nodes_explored = counter.nodes();
    return result;
}

bool is_independent_transversal(const Graph& h, const VertexPartition& p, const std::vector<Vertex>& vertices)
{
    require_host(h, p);
    if (vertices.size() != p.size())
        return false;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto& part = p.part(i);
        if (std::find(part.begin(), part.end(), vertices[i]) == part.end())
            return false;
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (h.adjacent(vertices[i], vertices[j]))
                return false;
    }
    return true;
}

} // namespace blowup
