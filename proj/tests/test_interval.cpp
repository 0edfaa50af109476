#include <doctest.h>

#include <random>

#include "boxicity/generators.hpp"
#include "boxicity/interval.hpp"
#include "oracles.hpp"

using namespace boxicity;

namespace {

IntervalRealization realization(std::initializer_list<Interval> ivs) { return IntervalRealization(ivs); }

}  // namespace

TEST_CASE("interval_edges uses closed intervals") {
    CHECK(interval_edges(realization({{0, 1}, {1, 2}, {3, 4}})) == EdgeSet{Edge(0, 1)});
    CHECK(interval_edges(realization({{0, 0}, {1, 1}, {2, 2}})).empty());
    CHECK(interval_edges(realization({{0, 5}, {1, 2}, {3, 4}})) == (EdgeSet{Edge(0, 1), Edge(0, 2)}));
    CHECK_THROWS_AS(realization({{2, 1}}), std::invalid_argument);
}

TEST_CASE("is_complete agrees with pairwise overlap") {
    CHECK(is_complete(realization({{0, 3}, {2, 5}, {3, 3}})));
    CHECK_FALSE(is_complete(realization({{0, 1}, {1, 2}, {2, 3}})));
    CHECK(is_complete(IntervalRealization()));
}

TEST_CASE("interval_edges is invariant under strictly monotone remapping") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Interval> ivs, mapped;
        for (int v = 0; v < 8; ++v) {
            Coord a = static_cast<Coord>(rng() % 10), b = static_cast<Coord>(rng() % 10);
            ivs.push_back({std::min(a, b), std::max(a, b)});
        }
        auto f = [](Coord x) { return 3 * x * x + 7 * x - 20; };  // increasing on x >= 0
        for (auto iv : ivs) mapped.push_back({f(iv.lo), f(iv.hi)});
        CHECK(interval_edges(IntervalRealization(ivs)) == interval_edges(IntervalRealization(mapped)));
    }
}

TEST_CASE("interval recognition on named graphs") {
    CHECK(is_interval_graph(path_graph(4)));
    CHECK(is_interval_graph(complete_graph(4)));
    CHECK_FALSE(is_interval_graph(cycle_graph(4)));
    CHECK_FALSE(is_interval_graph(cycle_graph(5)));
    CHECK(is_interval_graph(Graph(0)));
    CHECK(is_interval_graph(Graph(1)));
    CHECK(is_interval_graph(edgeless_graph(5)));
    CHECK(maximal_cliques(cycle_graph(4)).size() == 4);

    // Asteroidal triple without a cycle: the subdivided claw is chordal but not interval.
    std::vector<Edge> claw{Edge(0, 1), Edge(1, 2), Edge(0, 3), Edge(3, 4), Edge(0, 5), Edge(5, 6)};
    CHECK_FALSE(is_interval_graph(Graph::from_edges(7, claw)));

    CHECK_THROWS_AS(is_interval_graph(path_graph(kIntervalOracleLimit + 1)), std::invalid_argument);
    CHECK(is_interval_graph(path_graph(30), 30));
}

TEST_CASE("interval recognition agrees with endpoint-order enumeration for n <= 6") {
    for (Vertex n = 1; n <= 6; ++n) {
        auto known = oracle::all_interval_graphs(n);
        const int pairs = n * (n - 1) / 2;
        std::size_t count = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = oracle::graph_from_mask(n, mask);
            auto witness = interval_realization(g);
            bool expected = known.count(mask) > 0;
            CHECK(witness.has_value() == expected);
            if (witness) {
                ++count;
                CHECK(interval_edges(*witness) == g.edges());
            }
        }
        CHECK(count == known.size());
    }
}

TEST_CASE("verify_interval_representation") {
    CHECK(verify_interval_representation(complete_graph(3), {}).ok);
    CHECK_FALSE(verify_interval_representation(path_graph(3), {}).ok);

    std::vector<IntervalRealization> p3{realization({{0, 1}, {1, 2}, {2, 3}})};
    CHECK(verify_interval_representation(path_graph(3), p3).ok);

    std::vector<IntervalRealization> wrong{realization({{0, 2}, {1, 2}, {2, 3}})};
    auto r = verify_interval_representation(path_graph(3), wrong);
    CHECK_FALSE(r.ok);
    REQUIRE(r.counterexample);
    CHECK(*r.counterexample == Edge(0, 2));
    CHECK_FALSE(r.counterexample_in_graph);

    std::vector<IntervalRealization> mismatch{realization({{0, 1}, {1, 2}})};
    CHECK_THROWS_AS(verify_interval_representation(path_graph(3), mismatch), std::invalid_argument);
}

TEST_CASE("a verified interval representation is a supergraph in every coordinate") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<IntervalRealization> rs;
        for (int j = 0; j < 3; ++j) {
            std::vector<Interval> ivs;
            for (int v = 0; v < 6; ++v) {
                Coord a = static_cast<Coord>(rng() % 6), b = static_cast<Coord>(rng() % 6);
                ivs.push_back({std::min(a, b), std::max(a, b)});
            }
            rs.emplace_back(std::move(ivs));
        }
        EdgeSet meet = complete_edge_set(6);
        for (const auto& r : rs) meet = intersect(meet, interval_edges(r));
        Graph g = Graph::from_edges(6, meet);
        REQUIRE(verify_interval_representation(g, rs).ok);
        for (const auto& r : rs) {
            auto e = interval_edges(r);
            CHECK(std::includes(e.begin(), e.end(), meet.begin(), meet.end()));
        }
    }
}
