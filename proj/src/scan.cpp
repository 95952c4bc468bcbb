#include "blowup/scan.hpp"

#include "blowup/canonical.hpp"
#include "blowup/coloring.hpp"
#include "blowup/error.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

namespace blowup {

Ratio Ratio::make(std::uint64_t num, std::uint64_t den)
{
    if (den == 0)
        throw InvalidParameter("ratio with zero denominator");
    const std::uint64_t g = std::gcd(num, den);
    return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

std::optional<ScanRecord> solve_record(const Graph& g, std::size_t d, const Budget& budget)
{
    if (g.order() == 0)
        throw InvalidParameter("scan records need at least one vertex");
    const auto chi = chromatic_number(g, budget);
    if (chi.timed_out)
        return std::nullopt;
    const auto blowup = strong_product(g, d + 1);
    const auto chi_d = defective_chromatic_number(blowup.product(), d, budget);
    if (chi_d.timed_out)
        return std::nullopt;

    if (!is_proper(g, *chi.certificate) || chi.certificate->palette_size() != *chi.value)
        throw InternalError("chromatic number certificate failed verification");
    if (!is_d_defective(blowup.product(), *chi_d.certificate, d) || chi_d.certificate->palette_size() != *chi_d.value)
        throw InternalError("defective chromatic number certificate failed verification");

    ScanRecord r;
    r.n = g.order();
    r.m = g.edge_count();
    r.d = d;
    r.chi = *chi.value;
    r.chi_def_blowup = *chi_d.value;
    r.ratio = Ratio::make(r.chi, r.chi_def_blowup);
    if (r.ratio < Ratio{1, 1} || Ratio{2, 1} < r.ratio)
        throw InternalError("ratio chi / chi^d(blowup) = " + std::to_string(r.chi) + "/" +
                            std::to_string(r.chi_def_blowup) + " outside [1, 2]");
    r.id = graph_id(g);
    r.graph = g;
    return r;
}

std::vector<Graph> sample_graphs(std::size_t n, std::size_t count, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        GraphBuilder b(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                // 53 uniform bits, so the draw does not depend on the library's distributions.
                if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
                    b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        out.push_back(std::move(b).build());
    }
    return out;
}

ScanSummary scan(const ScanOptions& options)
{
    if (options.n_max > max_canonical_order)
        throw InvalidParameter("scan supports n_max <= " + std::to_string(max_canonical_order));
    std::vector<Graph> graphs;
    for (std::size_t n = 1; n <= options.n_max; ++n) {
        if (n <= options.exhaustive_max) {
            auto all = enumerate_graphs(n);
            graphs.insert(graphs.end(), std::make_move_iterator(all.begin()), std::make_move_iterator(all.end()));
        } else {
            std::set<std::string> seen;
            for (auto& g : sample_graphs(n, options.sample, options.edge_probability, options.seed + n))
                if (seen.insert(graph_id(g)).second)
                    graphs.push_back(std::move(g));
        }
    }

    ScanSummary summary;
    for (const Graph& g : graphs) {
        auto record = solve_record(g, options.d, options.budget);
        if (!record) {
            summary.skipped.push_back({graph_id(g), g.order(), "budget exhausted"});
            continue;
        }
        summary.records.push_back(std::move(*record));
    }
    std::sort(summary.records.begin(), summary.records.end(),
              [](const ScanRecord& a, const ScanRecord& b) { return std::tie(a.n, a.id) < std::tie(b.n, b.id); });
    std::sort(summary.skipped.begin(), summary.skipped.end(),
              [](const ScanSkip& a, const ScanSkip& b) { return std::tie(a.n, a.id) < std::tie(b.n, b.id); });

    for (const auto& r : summary.records) {
        if (r.chi == r.chi_def_blowup)
            ++summary.equality_count;
        if (!summary.max_ratio || *summary.max_ratio < r.ratio) {
            summary.max_ratio = r.ratio;
            summary.argmax_id = r.id;
        }
    }
    return summary;
}

} // namespace blowup
