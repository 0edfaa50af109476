#include <doctest.h>

#include <random>

#include "boxicity/boxrep.hpp"
#include "boxicity/construct.hpp"
#include "boxicity/generators.hpp"
#include "oracles.hpp"

using namespace boxicity;

namespace {

BoxRepresentation random_rep(std::mt19937_64& rng, Vertex n, std::size_t d, Coord span) {
    std::vector<IntervalRealization> dims;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Interval> ivs;
        for (Vertex v = 0; v < n; ++v) {
            Coord a = static_cast<Coord>(rng() % span), b = static_cast<Coord>(rng() % span);
            ivs.push_back({std::min(a, b), std::max(a, b)});
        }
        dims.emplace_back(std::move(ivs));
    }
    return BoxRepresentation(n, std::move(dims));
}

}  // namespace

TEST_CASE("box_edges examples") {
    CHECK(box_edges(BoxRepresentation(3)) == complete_edge_set(3));

    BoxRepresentation apart(2, {IntervalRealization({{0, 1}, {2, 3}}), IntervalRealization({{0, 1}, {0, 1}})});
    CHECK(box_edges(apart).empty());

    BoxRepresentation corner(2, {IntervalRealization({{0, 1}, {1, 2}}), IntervalRealization({{0, 1}, {1, 2}})});
    CHECK(box_edges(corner) == EdgeSet{Edge(0, 1)});
    CHECK(boxes_intersect(corner, 0, 1));

    CHECK_THROWS_AS(BoxRepresentation(3, {IntervalRealization({{0, 1}})}), std::invalid_argument);
}

TEST_CASE("box_edges matches brute force and the per-dimension intersection") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 150; ++trial) {
        Vertex n = static_cast<Vertex>(1 + rng() % 40);
        std::size_t d = rng() % 5;
        Coord span = 2 + static_cast<Coord>(rng() % 30);
        BoxRepresentation b = random_rep(rng, n, d, span);
        EdgeSet e = box_edges(b);
        CHECK(e == oracle::box_edges_brute(b));
        EdgeSet meet = complete_edge_set(n);
        for (const auto& dim : b.dims()) {
            auto de = interval_edges(dim);
            CHECK(std::includes(de.begin(), de.end(), e.begin(), e.end()));
            meet = intersect(meet, de);
        }
        CHECK(e == meet);

        auto dims = b.dims();
        std::shuffle(dims.begin(), dims.end(), rng);
        CHECK(box_edges(BoxRepresentation(n, dims)) == e);
    }
}

TEST_CASE("verify") {
    CHECK(verify(complete_graph(3), BoxRepresentation(3)).ok);
    Graph c4 = cycle_graph(4);
    CHECK(verify(c4, construct_box_representation(c4).representation).ok);

    // Any single dimension fails on C_4.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) CHECK_FALSE(verify(c4, random_rep(rng, 4, 1, 6)).ok);

    CHECK_THROWS_AS(verify(c4, BoxRepresentation(3)), std::invalid_argument);
}

TEST_CASE("verify reports the lexicographically smallest mismatch") {
    // Path 0-1-2-3 drawn as points 0,1,2,3 in one dimension: no pair meets.
    BoxRepresentation points(4, {IntervalRealization({{0, 0}, {1, 1}, {2, 2}, {3, 3}})});
    auto r = verify(path_graph(4), points);
    REQUIRE_FALSE(r.ok);
    CHECK(r.mismatch->pair == Edge(0, 1));
    CHECK(r.mismatch->in_graph);
    CHECK(r.mismatch->overlap_per_dim == std::vector<bool>{false});

    // All boxes coincide: first extra pair is (0,2).
    BoxRepresentation blob(4, {IntervalRealization({{0, 1}, {0, 1}, {0, 1}, {0, 1}})});
    auto s = verify(path_graph(4), blob);
    REQUIRE_FALSE(s.ok);
    CHECK(s.mismatch->pair == Edge(0, 2));
    CHECK_FALSE(s.mismatch->in_graph);
}

TEST_CASE("verify agrees with brute-force edge comparison") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        Vertex n = static_cast<Vertex>(2 + rng() % 12);
        BoxRepresentation b = random_rep(rng, n, 1 + rng() % 3, 8);
        EdgeSet truth = oracle::box_edges_brute(b);
        Graph exact = Graph::from_edges(n, truth);
        CHECK(verify(exact, b).ok);
        Graph other = random_bounded_degree(n, 3, rng());
        CHECK(verify(other, b).ok == (other.edges() == truth));
    }
}

TEST_CASE("prune examples") {
    IntervalRealization flat({{0, 1}, {0, 1}, {0, 1}});
    IntervalRealization useful({{0, 0}, {0, 1}, {1, 1}});
    CHECK(prune(BoxRepresentation(3, {flat, useful})).dimension() == 1);
    CHECK(prune(BoxRepresentation(3, {useful, useful})).dimension() == 1);
    BoxRepresentation minimal(3, {useful});
    CHECK(prune(minimal) == minimal);
}

TEST_CASE("prune preserves box_edges, never grows and is idempotent") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        Vertex n = static_cast<Vertex>(1 + rng() % 20);
        BoxRepresentation b = random_rep(rng, n, rng() % 4, 4);
        // Add redundancy: a copy and a complete dimension.
        auto dims = b.dims();
        if (!dims.empty()) dims.push_back(dims.front());
        dims.emplace_back(std::vector<Interval>(static_cast<std::size_t>(n), Interval{0, 0}));
        BoxRepresentation padded(n, dims);
        BoxRepresentation p = prune(padded);
        CHECK(p.dimension() <= b.dimension());
        CHECK(box_edges(p) == box_edges(padded));
        CHECK(prune(p) == p);
    }
}
