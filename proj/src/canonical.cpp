#include "blowup/canonical.hpp"

#include "blowup/error.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace blowup {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

// Bit position of the pair (u, v), u < v, counted from the most significant end.
std::size_t pair_shift(std::size_t n, std::size_t u, std::size_t v)
{
    const std::size_t before = u * n - u * (u + 1) / 2 + (v - u - 1);
    return pair_count(n) - 1 - before;
}

void require_small(std::size_t n)
{
    if (n > max_canonical_order)
        throw InvalidParameter("canonical labeling supports at most " + std::to_string(max_canonical_order) +
                               " vertices, got " + std::to_string(n));
}

std::uint64_t code_under(std::size_t n, const std::vector<Edge>& edges, const std::vector<std::size_t>& perm)
{
    std::uint64_t code = 0;
    for (auto [u, v] : edges) {
        std::size_t a = perm[static_cast<std::size_t>(u)];
        std::size_t b = perm[static_cast<std::size_t>(v)];
        if (a > b)
            std::swap(a, b);
        code |= std::uint64_t{1} << pair_shift(n, a, b);
    }
    return code;
}

std::uint64_t canonical_from_edges(std::size_t n, const std::vector<Edge>& edges)
{
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint64_t best = 0;
    do {
        best = std::max(best, code_under(n, edges, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace

std::uint64_t adjacency_code(const Graph& g)
{
    require_small(g.order());
    std::vector<std::size_t> identity(g.order());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    return code_under(g.order(), g.edges(), identity);
}

Graph graph_from_code(std::size_t n, std::uint64_t code)
{
    require_small(n);
    GraphBuilder b(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if ((code >> pair_shift(n, u, v)) & 1u)
                b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return std::move(b).build();
}

std::uint64_t canonical_code(const Graph& g)
{
    require_small(g.order());
    return canonical_from_edges(g.order(), g.edges());
}

Graph canonical_graph(const Graph& g)
{
    return graph_from_code(g.order(), canonical_code(g));
}

std::string graph_id(const Graph& g)
{
    const std::uint64_t code = canonical_code(g);
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t word) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (word >> (8 * byte)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    };
    mix(g.order());
    mix(code);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::vector<Graph> enumerate_graphs(std::size_t n)
{
    require_small(n);
    const std::size_t pairs = pair_count(n);
    if (pairs >= 63)
        throw InvalidParameter("too many vertices to enumerate");
    std::vector<std::uint64_t> codes;
    std::vector<Edge> edges;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
        edges.clear();
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if ((code >> pair_shift(n, u, v)) & 1u)
                    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        const std::uint64_t canon = canonical_from_edges(n, edges);
        if (canon == code)
            codes.push_back(canon);
    }
    std::sort(codes.rbegin(), codes.rend());
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t c : codes)
        out.push_back(graph_from_code(n, c));
    return out;
}

} // namespace blowup
