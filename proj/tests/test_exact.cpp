#include <doctest.h>

#include <algorithm>

#include "boxicity/construct.hpp"
#include "boxicity/exact.hpp"
#include "boxicity/generators.hpp"
#include "oracles.hpp"

using namespace boxicity;

namespace {

void check_witness(const Graph& g, const ExactResult& r) {
    CHECK(static_cast<int>(r.witness.size()) == r.boxicity);
    CHECK(verify_interval_representation(g, r.witness).ok);
}

}  // namespace

TEST_CASE("interval_supergraphs examples") {
    auto k3 = interval_supergraphs(complete_graph(3));
    REQUIRE(k3.size() == 1);
    CHECK(k3[0] == complete_edge_set(3));

    // C_4 has two non-edges (0,2) and (1,3); every proper superset is interval.
    Graph c4 = cycle_graph(4);
    auto sup = interval_supergraphs(c4);
    CHECK(sup.size() == 3);
    CHECK(std::find(sup.begin(), sup.end(), c4.edges()) == sup.end());
    CHECK(std::find(sup.begin(), sup.end(), complete_edge_set(4)) != sup.end());
    for (Edge chord : {Edge(0, 2), Edge(1, 3)}) {
        auto e = c4.edges();
        e.push_back(chord);
        std::sort(e.begin(), e.end());
        CHECK(std::find(sup.begin(), sup.end(), e) != sup.end());
    }

    CHECK(interval_supergraphs(edgeless_graph(2)).size() == 2);
}

TEST_CASE("interval_supergraphs contains exactly the interval supersets (brute force, n <= 5)") {
    for (Vertex n = 1; n <= 5; ++n) {
        auto known = oracle::all_interval_graphs(n);
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            Graph g = random_bounded_degree(n, 2, seed);
            const std::uint64_t base = oracle::edge_mask(g);
            std::vector<EdgeSet> expected;
            const int pairs = n * (n - 1) / 2;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m)
                if ((m & base) == base && known.count(m)) expected.push_back(oracle::graph_from_mask(n, m).edges());
            auto got = interval_supergraphs(g);
            std::sort(expected.begin(), expected.end());
            std::sort(got.begin(), got.end());
            CHECK(got == expected);
        }
    }
}

TEST_CASE("exact_boxicity values") {
    CHECK(exact_boxicity(complete_graph(5)).boxicity == 0);
    CHECK(exact_boxicity(complete_graph(5)).witness.empty());

    auto c4 = exact_boxicity(cycle_graph(4));
    CHECK(c4.boxicity == 2);
    check_witness(cycle_graph(4), c4);

    auto oct = exact_boxicity(cocktail_party(3));
    CHECK(oct.boxicity == 3);
    check_witness(cocktail_party(3), oct);

    auto p5 = exact_boxicity(path_graph(5));
    CHECK(p5.boxicity == 1);
    check_witness(path_graph(5), p5);

    CHECK(exact_boxicity(Graph(0)).boxicity == 0);
    CHECK(exact_boxicity(Graph(1)).boxicity == 0);
    CHECK(exact_boxicity(edgeless_graph(2)).boxicity == 1);
    CHECK(exact_boxicity(cycle_graph(5)).boxicity == 2);
}

TEST_CASE("boxicity_at_most") {
    CHECK_FALSE(boxicity_at_most(cycle_graph(4), 1));
    auto w = boxicity_at_most(cycle_graph(4), 2);
    REQUIRE(w);
    CHECK(verify_interval_representation(cycle_graph(4), *w).ok);
    CHECK(boxicity_at_most(complete_graph(4), 0));
    CHECK_FALSE(boxicity_at_most(path_graph(3), 0));
    CHECK_THROWS_AS(boxicity_at_most(path_graph(3), -1), std::invalid_argument);
}

TEST_CASE("budget exhaustion is reported, never silently answered") {
    CHECK_THROWS_AS(exact_boxicity(path_graph(9)), budget_exceeded);
    OracleBudget tiny;
    tiny.max_supergraphs = 2;
    CHECK_THROWS_AS(exact_boxicity(cocktail_party(3), tiny), budget_exceeded);
    OracleBudget shallow;
    shallow.max_k = 2;
    CHECK_THROWS_AS(exact_boxicity(cocktail_party(3), shallow), budget_exceeded);
    CHECK_THROWS_AS(boxicity_at_most(cocktail_party(3), 3, shallow), budget_exceeded);
}

TEST_CASE("oracle properties on small graphs") {
    auto corpus = oracle::random_corpus({3, 4, 5, 6}, 4, 4);
    for (auto& s : oracle::named_families(6)) corpus.push_back(std::move(s));
    for (const auto& s : corpus) {
        CAPTURE(s.name);
        const Graph& g = s.graph;
        ExactResult r = exact_boxicity(g);
        check_witness(g, r);
        CHECK((r.boxicity <= 1) == is_interval_graph(g));
        CHECK((r.boxicity == 0) == (g.size() == complete_edge_set(g.order()).size()));
        CHECK(r.boxicity <= static_cast<int>(construct_box_representation(g).representation.dimension()));
        for (int k = 0; k <= 3; ++k) {
            auto at = boxicity_at_most(g, k);
            CHECK(at.has_value() == (r.boxicity <= k));
            if (at) {
                CHECK(static_cast<int>(at->size()) <= k);
                CHECK(verify_interval_representation(g, *at).ok);
                CHECK(boxicity_at_most(g, k + 1).has_value());
            }
        }
    }
}

TEST_CASE("cocktail party graphs reach boxicity k") {
    for (Vertex k = 1; k <= 3; ++k) {
        auto r = exact_boxicity(cocktail_party(k));
        CHECK(r.boxicity == k);
        check_witness(cocktail_party(k), r);
    }
}
