#pragma once

// Empirical scan of chi(G) / chi^d(G ⊠ K_{d+1}) over small graphs.

#include "blowup/graph.hpp"
#include "blowup/solvers.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace blowup {

/// Non-negative fraction in lowest terms.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Ratio make(std::uint64_t num, std::uint64_t den);
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Ratio&, const Ratio&) = default;
    /// Exact comparison by cross-multiplication.
    friend bool operator<(const Ratio& a, const Ratio& b) noexcept { return a.num * b.den < b.num * a.den; }
};

/// The counterexample family's reference ratio, 30/29.
inline constexpr Ratio reference_ratio{30, 29};

struct ScanRecord {
    std::string id;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t d = 0;
    std::size_t chi = 0;
    std::size_t chi_def_blowup = 0;
    Ratio ratio;
    Graph graph;
};

struct ScanSkip {
    std::string id;
    std::size_t n = 0;
    std::string reason;
};

struct ScanOptions {
    std::size_t n_max = 5;
    std::size_t d = 1;
    /// Seeded G(n, p) samples per order for n above exhaustive_max.
    std::size_t sample = 20;
    std::uint64_t seed = 1;
    double edge_probability = 0.5;
    std::size_t exhaustive_max = 6;
    Budget budget;
};

struct ScanSummary {
    std::vector<ScanRecord> records; ///< ordered by (n, id)
    std::vector<ScanSkip> skipped;
    std::optional<Ratio> max_ratio;
    std::string argmax_id;
    std::size_t equality_count = 0;
};

/// Solves chi(g) and chi^d(g ⊠ K_{d+1}), re-verifies both certificates and
/// checks 1 <= ratio <= 2 (InternalError otherwise). nullopt on timeout.
std::optional<ScanRecord> solve_record(const Graph& g, std::size_t d, const Budget& budget = {});

/// `count` seeded G(n, p) graphs. Deterministic for a fixed seed.
std::vector<Graph> sample_graphs(std::size_t n, std::size_t count, double p, std::uint64_t seed);

/// All isomorphism classes for 1 <= n <= min(n_max, exhaustive_max), then
/// deduplicated G(n, p) samples for larger n. Timeouts are recorded in
/// `skipped`, never dropped silently.
ScanSummary scan(const ScanOptions& options);

} // namespace blowup
