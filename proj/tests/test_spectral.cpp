#include "blowup/error.hpp"
#include "blowup/spectral.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace blowup;

TEST_CASE("complete graphs give n")
{
    for (std::size_t n = 2; n <= 9; ++n) {
        const auto h = hoffman_bound(Graph::complete(n));
        CHECK(h.lambda_max == doctest::Approx(static_cast<double>(n - 1)).epsilon(1e-12));
        CHECK(h.lambda_min == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(std::abs(h.value - static_cast<double>(n)) <= 1e-9);
    }
}

TEST_CASE("five-cycle")
{
    // Cycle eigenvalues are 2 cos(2 pi j / 5); the smallest is 2 cos(4 pi / 5).
    const double lmin = 2.0 * std::cos(4.0 * std::numbers::pi / 5.0);
    const double expected = (2.0 - lmin) / (-lmin);
    const auto h = hoffman_bound(Graph::cycle(5));
    CHECK(std::abs(h.lambda_min - lmin) <= 1e-9);
    CHECK(std::abs(h.value - expected) <= 1e-9);
    CHECK(h.value == doctest::Approx(2.236).epsilon(1e-3));
}

TEST_CASE("K33 gives 2")
{
    const auto h = hoffman_bound(testing::complete_bipartite(3, 3));
    CHECK(std::abs(h.lambda_max - 3.0) <= 1e-9);
    CHECK(std::abs(h.lambda_min + 3.0) <= 1e-9);
    CHECK(std::abs(h.value - 2.0) <= 1e-9);
}

TEST_CASE("degenerate inputs")
{
    CHECK_THROWS_AS(hoffman_bound(Graph(0)), InvalidParameter);
    const auto h = hoffman_bound(Graph(3));
    CHECK(h.edgeless);
    CHECK(h.value == 1.0);
}
