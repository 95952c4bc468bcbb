#include "blowup/witness_report.hpp"

#include <algorithm>

namespace blowup {

std::string_view to_string(CheckStatus s) noexcept
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "FAIL";
    case CheckStatus::unverified:
        return "unverified: budget";
    }
    return "?";
}

WitnessReport validate_witness(const Witness& w, const Budget& budget)
{
    WitnessReport r;
    r.d = w.d;
    r.k = w.k;
    r.formula_k = witness_palette_size(w.d);
    r.palette_matches_formula = r.formula_k == w.k;

    r.min_list_size = w.lists.size() == 0 ? 0 : w.lists.list(0).size();
    for (const auto& l : w.lists.lists())
        r.min_list_size = std::min(r.min_list_size, l.size());
    r.list_sizes = (w.lists.size() == 0 || r.min_list_size >= w.d + 1) ? CheckStatus::pass : CheckStatus::fail;

    r.max_color_degree = max_color_degree(w.F, w.lists);
    r.color_degrees = r.max_color_degree <= w.d ? CheckStatus::pass : CheckStatus::fail;

    const auto solved = is_list_colorable(w.F, w.lists, budget);
    r.nodes_explored = solved.nodes_explored;
    if (solved.timed_out) {
        r.no_list_coloring = CheckStatus::unverified;
    } else if (*solved.value) {
        r.no_list_coloring = CheckStatus::fail;
        r.list_coloring = solved.certificate;
    } else {
        r.no_list_coloring = CheckStatus::pass;
    }
    return r;
}

} // namespace blowup
