#include "blowup/constructions.hpp"
#include "blowup/error.hpp"
#include "blowup/solvers.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "witness_gen.hpp"

#include <doctest.h>

#include <random>

using namespace blowup;

namespace {

Witness witness(Graph F, std::vector<std::vector<Color>> lists, std::size_t d)
{
    return Witness::make(std::move(F), ListAssignment(std::move(lists)), d);
}

} // namespace

TEST_CASE("witness palette size")
{
    CHECK(witness_palette_size(2) == 29);
    // 2*27 + 2*9 + 3 + 3
    CHECK(witness_palette_size(3) == 78);
    CHECK(witness_palette_size(1) == 8);
}

TEST_CASE("normalize_witness examples")
{
    const Witness dense = witness(Graph::complete(2), {{0, 1}, {1, 2}}, 1);
    const Witness same = normalize_witness(dense);
    CHECK(same.lists == dense.lists);
    CHECK(same.k == 3);

    const Witness single = normalize_witness(witness(Graph(1), {{5, 9, 11}}, 2));
    CHECK(single.lists.lists() == std::vector<std::vector<Color>>{{0, 1, 2}});
    CHECK(single.k == 3);

    const Witness trunc = normalize_witness(witness(Graph::complete(2), {{1, 2, 3}, {2, 3, 4}}, 1));
    CHECK(trunc.lists.lists() == std::vector<std::vector<Color>>{{0, 1}, {1, 2}});
    CHECK(trunc.k == 3);
    CHECK(is_normalized(trunc));

    try {
        normalize_witness(witness(Graph::complete(2), {{0, 1, 2}, {1, 2}}, 2));
        FAIL("expected InvalidWitness");
    } catch (const InvalidWitness& e) {
        CHECK(std::string(e.what()).find("vertex 1") != std::string::npos);
    }
}

TEST_CASE("normalization preserves non-colorability and does not raise color degrees")
{
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = testing::uniform(rng, 1, 5);
        const std::size_t d = testing::uniform(rng, 0, 2);
        const Graph F = testing::random_graph(rng, n, 0.6);
        std::vector<std::vector<Color>> lists(n);
        for (auto& l : lists) {
            std::vector<Color> pool{3, 7, 8, 12, 20};
            std::shuffle(pool.begin(), pool.end(), rng);
            l.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(testing::uniform(rng, d + 1, 5)));
        }
        const Witness raw = witness(F, lists, d);
        const Witness norm = normalize_witness(raw);
        CHECK(is_normalized(norm));
        CHECK(max_color_degree(norm.F, norm.lists) <= max_color_degree(raw.F, raw.lists));
        if (!oracle::list_colorable(raw.F, raw.lists.lists()))
            CHECK_FALSE(oracle::list_colorable(norm.F, norm.lists.lists()));
    }
}

TEST_CASE("build_counterexample examples")
{
    SUBCASE("full list attaches nothing")
    {
        const auto b = build_counterexample(witness(Graph(1), {{0, 1, 2}}, 2));
        CHECK(b.G.order() == 4);
        CHECK(b.G.edge_count() == 3);
        CHECK(b.G.degree(0) == 0);
    }
    SUBCASE("uncolorable K2 with equal singleton lists")
    {
        const Witness w = witness(Graph::complete(2), {{0}, {0}}, 0);
        const auto b = build_counterexample(w);
        CHECK(b.G.order() == 3);
        CHECK(b.G.adjacent(0, 1));
        CHECK_FALSE(b.G.adjacent(0, 2));
        CHECK_FALSE(b.G.adjacent(1, 2));
        CHECK(oracle::chromatic_number(b.G) == 2);
        CHECK(*chromatic_number(b.G).value == 2);
        CHECK_FALSE(*is_list_colorable(w.F, w.lists).value);
    }
    SUBCASE("colorable path")
    {
        const Witness w = witness(Graph::path(3), {{0, 1}, {0, 1}, {0, 1}}, 1);
        const auto b = build_counterexample(w);
        CHECK(b.G.edge_count() == 3);
        CHECK(oracle::chromatic_number(b.G) == 2);
        CHECK(*chromatic_number(b.G).value == 2);
    }
    SUBCASE("unnormalized witness is rejected")
    {
        CHECK_THROWS_AS(build_counterexample(witness(Graph(1), {{0, 2}}, 1)), InvalidWitness);
        CHECK_THROWS_AS(build_counterexample(witness(Graph(1), {{0, 1, 2}}, 1)), InvalidWitness);
    }
}

TEST_CASE("counterexample structure, size law and the coloring biconditional")
{
    std::mt19937_64 rng(55);
    int colorable = 0;
    int uncolorable = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const Witness w = testing::random_witness(rng, 6, 6, 2, trial % 2 == 0);
        const auto b = build_counterexample(w);

        CHECK(b.G.order() == w.F.order() + w.k);
        CHECK(b.G.edge_count() == w.F.edge_count() + w.k * (w.k - 1) / 2 + w.F.order() * (w.k - (w.d + 1)));
        for (std::size_t s = 0; s < w.k; ++s)
            for (std::size_t t = s + 1; t < w.k; ++t)
                CHECK(b.G.adjacent(b.clique_vertex(s), b.clique_vertex(t)));
        for (std::size_t u = 0; u < w.F.order(); ++u)
            for (std::size_t t = 0; t < w.k; ++t)
                CHECK(b.G.adjacent(static_cast<Vertex>(u), b.clique_vertex(t)) ==
                      !w.lists.contains(static_cast<Vertex>(u), static_cast<Color>(t)));

        const bool list_ok = oracle::list_colorable(w.F, w.lists.lists());
        const auto chi = chromatic_number(b.G);
        REQUIRE(chi.value.has_value());
        CHECK((*chi.value <= w.k) == list_ok);
        CHECK(*is_list_colorable(w.F, w.lists).value == list_ok);
        (list_ok ? colorable : uncolorable) += 1;
    }
    CHECK(colorable > 0);
    CHECK(uncolorable > 0);
}

TEST_CASE("defective_coloring_cd examples")
{
    SUBCASE("single vertex")
    {
        const Witness w = witness(Graph(1), {{0, 1, 2}}, 2);
        const auto b = build_counterexample(w);
        const Coloring c = defective_coloring_cd(w, b);
        CHECK(c.colors() == std::vector<Color>{0, 1, 2, 0, 0, 0, 1, 1, 1, 2, 2, 2});
        CHECK(defect(strong_product(b.G, 3).product(), c) == 2);
    }
    SUBCASE("K2 with lists {0,1},{0,2}")
    {
        const Witness w = witness(Graph::complete(2), {{0, 1}, {0, 2}}, 1);
        const auto b = build_counterexample(w);
        const Coloring c = defective_coloring_cd(w, b);
        const Graph p = strong_product(b.G, 2).product();
        CHECK(p.order() == 10);
        CHECK(c.colors()[0] == 0);
        CHECK(c.colors()[1] == 1);
        CHECK(c.colors()[2] == 0);
        CHECK(c.colors()[3] == 2);
        CHECK(oracle::defect(p, c.colors()) == 1);
        CHECK(defect(p, c) == 1);
    }
    SUBCASE("mismatched bundle")
    {
        const Witness w = witness(Graph(1), {{0, 1, 2}}, 2);
        const auto other = build_counterexample(witness(Graph(2), {{0, 1, 2}, {0, 1, 2}}, 2));
        CHECK_THROWS_AS(defective_coloring_cd(w, other), InvalidParameter);
    }
}

TEST_CASE("c^d defect equals max(d, max color degree)")
{
    std::mt19937_64 rng(66);
    for (int trial = 0; trial < 120; ++trial) {
        const Witness w = testing::random_witness(rng, 6, 6, 2, trial % 3 != 0);
        const auto b = build_counterexample(w);
        const Coloring c = defective_coloring_cd(w, b);
        const Graph p = strong_product(b.G, w.d + 1).product();
        const std::size_t mcd = max_color_degree(w.F, w.lists);
        CHECK(defect(p, c) == std::max(w.d, mcd));
        CHECK(c.palette().back() < static_cast<Color>(w.k));
        if (mcd <= w.d)
            CHECK(is_d_defective(p, c, w.d));
    }
}

TEST_CASE("lift_proper_to_defective")
{
    const Coloring k1 = lift_proper_to_defective(Graph(1), Coloring({0}), 4);
    CHECK(k1.colors() == std::vector<Color>{0, 0, 0, 0});
    CHECK(defect(Graph::complete(4), k1) == 3);

    const Coloring k2 = lift_proper_to_defective(Graph::complete(2), Coloring({0, 1}), 2);
    CHECK(defect(strong_product(Graph::complete(2), 2).product(), k2) == 1);
    CHECK(k2.palette_size() == 2);

    const Coloring c5 = lift_proper_to_defective(Graph::cycle(5), Coloring({0, 1, 0, 1, 2}), 3);
    CHECK(defect(strong_product(Graph::cycle(5), 3).product(), c5) == 2);
    CHECK(c5.palette_size() == 3);

    CHECK_THROWS_AS(lift_proper_to_defective(Graph::complete(2), Coloring({0, 0}), 2), InvalidParameter);
}

TEST_CASE("trivial inequality: chi^d of the blowup never exceeds chi")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = testing::random_graph(rng, testing::uniform(rng, 1, 6), testing::unit(rng));
        const std::size_t d = testing::uniform(rng, 1, 2);
        const auto chi = chromatic_number(g);
        const Graph p = strong_product(g, d + 1).product();
        const Coloring lifted = lift_proper_to_defective(g, *chi.certificate, d + 1);
        CHECK(defect(p, lifted) == d);
        CHECK(*defective_chromatic_number(p, d).value <= *chi.value);
    }
}

TEST_CASE("block_index")
{
    for (std::size_t i = 0; i <= 2; ++i)
        CHECK(block_index(i, 2, 2) == i);
    const std::vector<std::size_t> want{0, 0, 1, 1, 2, 2};
    for (std::size_t i = 0; i <= 5; ++i)
        CHECK(block_index(i, 5, 2) == want[i]);
    CHECK_THROWS_AS(block_index(0, 4, 2), InvalidParameter);
    CHECK_THROWS_AS(block_index(6, 5, 2), InvalidParameter);
}

TEST_CASE("corollary_join_lift")
{
    SUBCASE("identity case d = delta, m = 1")
    {
        const Coloring c0({0, 0, 0});
        const auto out = corollary_join_lift(Graph(1), c0, 2, 1, 2);
        CHECK(out.coloring == c0);
        CHECK(defect(strong_product(out.joined, 3).product(), out.coloring) == 2);
    }
    SUBCASE("C5, delta = 1, m = 2, d = 3")
    {
        const Graph base = strong_product(Graph::cycle(5), 2).product();
        const auto c0 = defective_chromatic_number(base, 1);
        REQUIRE(*c0.value == 3);
        const auto out = corollary_join_lift(Graph::cycle(5), *c0.certificate, 1, 2, 3);
        const Graph p = strong_product(out.joined, 4).product();
        CHECK(p.order() == 40);
        CHECK(out.block_width == 3);
        CHECK(oracle::defect(p, out.coloring.colors()) <= 3);
        CHECK(out.coloring.palette_size() == 6);
    }
    SUBCASE("delta = 2, d = 5")
    {
        const Graph g0 = testing::petersen();
        const auto c0 = defective_chromatic_number(strong_product(g0, 3).product(), 2);
        const auto out = corollary_join_lift(g0, *c0.certificate, 2, 2, 5);
        CHECK(is_d_defective(strong_product(out.joined, 6).product(), out.coloring, 5));
        CHECK(out.coloring.palette_size() == 2 * *c0.value);
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(corollary_join_lift(Graph(1), Coloring({0, 0, 0}), 2, 1, 3), InvalidParameter);
        CHECK_THROWS_AS(corollary_join_lift(Graph(1), Coloring({0, 0}), 1, 0, 1), InvalidParameter);
        // Monochromatic K_2 ⊠ K_2 = K_4 has defect 3 > 1.
        CHECK_THROWS_AS(corollary_join_lift(Graph::complete(2), Coloring({0, 0, 0, 0}), 1, 1, 1), InvalidParameter);
        CHECK_THROWS_AS(corollary_join_lift(Graph(1), Coloring({0}), 1, 1, 1), InvalidParameter);
    }
}

TEST_CASE("extract_proper_from_defective examples")
{
    SUBCASE("K2 with a monochromatic coloring is tight")
    {
        const auto x = extract_proper_from_defective(Graph::complete(2), 1, Coloring({0, 0}));
        CHECK(x.auxiliary.order() == 4);
        CHECK(x.auxiliary.edge_count() == 2);
        CHECK(x.auxiliary_max_degree == 1);
        CHECK(x.coloring.colors() == std::vector<Color>{0, 1});
        CHECK(x.coloring.palette_size() == 2);
    }
    SUBCASE("edgeless host")
    {
        const auto x = extract_proper_from_defective(Graph(3), 2, Coloring({0, 0, 0, 0, 0, 0}));
        CHECK(x.auxiliary.edge_count() == 0);
        CHECK(is_proper(Graph(3), x.coloring));
    }
    SUBCASE("C5 with d = 2 through the solver")
    {
        const Graph g = Graph::cycle(5);
        const auto c = defective_chromatic_number(strong_product(g, 2).product(), 2);
        const auto x = extract_proper_from_defective(g, 2, *c.certificate);
        CHECK(is_proper(g, x.coloring));
        CHECK(x.coloring.palette_size() <= 2 * *c.value);
    }
    SUBCASE("errors")
    {
        CHECK_THROWS_AS(extract_proper_from_defective(Graph::complete(2), 0, Coloring{}), InvalidParameter);
        CHECK_THROWS_AS(extract_proper_from_defective(Graph::complete(2), 1, Coloring({0})), InvalidParameter);
        // K3 ⊠ K1 monochromatic has defect 2 > 1.
        CHECK_THROWS_AS(extract_proper_from_defective(Graph::complete(3), 1, Coloring({0, 0, 0})), InvalidParameter);
    }
}

TEST_CASE("extraction on random inputs: proper, <= 2k colors, auxiliary degree <= d")
{
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = testing::uniform(rng, 1, 7);
        const std::size_t d = testing::uniform(rng, 1, 3);
        const Graph g = testing::random_graph(rng, n, testing::unit(rng));
        const Graph p = strong_product(g, d).product();
        // Any d-defective coloring works, not only optimal ones: take a
        // random coloring and repair it by recoloring offenders uniquely.
        std::vector<Color> colors(p.order());
        for (auto& c : colors)
            c = static_cast<Color>(rng() % 3);
        Color fresh = 3;
        while (oracle::defect(p, colors) > d) {
            for (std::size_t v = 0; v < p.order(); ++v) {
                std::size_t same = 0;
                p.for_each_neighbor(static_cast<Vertex>(v), [&](Vertex u) { same += colors[u] == colors[v]; });
                if (same > d) {
                    colors[v] = fresh++;
                    break;
                }
            }
        }
        const Coloring c(colors);
        const auto x = extract_proper_from_defective(g, d, c);
        CHECK(x.auxiliary_max_degree <= d);
        CHECK(is_proper(g, x.coloring));
        CHECK(x.coloring.palette_size() <= 2 * c.palette_size());
    }
}
