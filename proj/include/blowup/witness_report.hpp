#pragma once

#include "blowup/coloring.hpp"
#include "blowup/constructions.hpp"
#include "blowup/solvers.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace blowup {

enum class CheckStatus { pass, fail, unverified };

std::string_view to_string(CheckStatus s) noexcept;

/// Checks the four properties a counterexample witness is expected to have:
/// lists of size >= d + 1, color degrees <= d, no L-coloring, and palette
/// size 2d^3 + 2d^2 + d + 3 (informational only).
struct WitnessReport {
    std::size_t d = 0;
    std::size_t k = 0;
    std::size_t min_list_size = 0;
    std::size_t max_color_degree = 0;
    CheckStatus list_sizes = CheckStatus::fail;
    CheckStatus color_degrees = CheckStatus::fail;
    CheckStatus no_list_coloring = CheckStatus::unverified;
    std::uint64_t formula_k = 0;
    bool palette_matches_formula = false;
    std::optional<Coloring> list_coloring; ///< counter-evidence when one exists
    std::uint64_t nodes_explored = 0;

    /// The first three properties pass.
    bool usable() const noexcept
    {
        return list_sizes == CheckStatus::pass && color_degrees == CheckStatus::pass &&
               no_list_coloring == CheckStatus::pass;
    }
};

WitnessReport validate_witness(const Witness& w, const Budget& budget = {});

} // namespace blowup
