#pragma once

#include "blowup/solvers.hpp"

#include <chrono>
#include <cstdint>

namespace blowup::detail {

struct BudgetExhausted {};

/// Counts search nodes and throws BudgetExhausted once the node or
/// wall-clock limit is exceeded. The clock is sampled every 1024 nodes.
class NodeCounter {
public:
    explicit NodeCounter(const Budget& budget)
        : budget_(budget), start_(std::chrono::steady_clock::now())
    {
    }

    void tick()
    {
        ++nodes_;
        if (nodes_ > budget_.max_nodes)
            throw BudgetExhausted{};
        if (budget_.max_seconds && (nodes_ & 1023u) == 0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > *budget_.max_seconds)
                throw BudgetExhausted{};
        }
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
};

} // namespace blowup::detail
