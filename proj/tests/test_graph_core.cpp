#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "ivg/errors.hpp"
#include "ivg/graph.hpp"
#include "ivg/graph6.hpp"
#include "test_util.hpp"

using ivg::CanonicalForm;
using ivg::Graph;

namespace {

// Isomorphism classes of all labelled graphs, for n = 0..5.
constexpr std::uint64_t all_graph_classes[] = {1, 1, 2, 4, 11, 34};

}  // namespace

TEST_CASE("graph basics") {
    Graph g(4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.degree(2) == 2);
    CHECK(g.degree(1) == 0);
    CHECK(g.edge_count() == 2);
    CHECK(g.neighbours(2) == ((1u << 0) | (1u << 3)));

    CHECK_THROWS_AS(Graph(33), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)g.has_edge(-1, 0), std::invalid_argument);
}

TEST_CASE("canonical form separates exactly the isomorphism classes (n <= 5, exhaustive)") {
    for (int n = 0; n <= 5; ++n) {
        const int slots = n * (n - 1) / 2;
        std::map<CanonicalForm, Graph> classes;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
            const Graph g = test_util::graph_from_mask(n, mask);
            const CanonicalForm form = ivg::canonicalize(g);
            auto [it, fresh] = classes.emplace(form, g);
            // Equal keys must mean genuinely isomorphic graphs.
            if (!fresh) CHECK(test_util::isomorphic_by_brute_force(g, it->second));
        }
        REQUIRE(classes.size() == all_graph_classes[n]);
        // Distinct keys must mean genuinely non-isomorphic graphs.
        std::vector<Graph> reps;
        for (const auto& [form, g] : classes) reps.push_back(g);
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (std::size_t j = i + 1; j < reps.size(); ++j)
                CHECK_FALSE(test_util::isomorphic_by_brute_force(reps[i], reps[j]));
    }
}

TEST_CASE("canonical form is invariant under relabelling (random, n <= 8)") {
    std::mt19937 rng(20260815);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = test_util::random_graph(n, rng);
        const Graph h = test_util::permuted(g, test_util::random_permutation(n, rng));
        CHECK(ivg::canonicalize(g) == ivg::canonicalize(h));
    }
}

TEST_CASE("is_isomorphic agrees with brute force on random pairs") {
    std::mt19937 rng(7031);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const Graph a = test_util::random_graph(n, rng);
        const Graph b = test_util::random_graph(n, rng);
        CHECK(ivg::is_isomorphic(a, b) == test_util::isomorphic_by_brute_force(a, b));
    }
}

TEST_CASE("canonical form rebuilds into a graph that canonicalizes to itself") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng() % 9);
        const Graph g = test_util::random_graph(n, rng);
        const CanonicalForm form = ivg::canonicalize(g);
        const Graph rebuilt = ivg::graph_of_canonical_form(form);
        CHECK(rebuilt.vertex_count() == n);
        CHECK(ivg::canonicalize(rebuilt) == form);
        CHECK(ivg::is_isomorphic(g, rebuilt));
    }
}

TEST_CASE("packed keys round-trip below the 11-vertex limit and refuse beyond") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng() % 12);  // 0..11
        const CanonicalForm form = ivg::canonicalize(test_util::random_graph(n, rng));
        const CanonicalForm back = CanonicalForm::from_packed(form.packed());
        CHECK(back == form);
    }
    const CanonicalForm big = ivg::canonicalize(test_util::random_graph(12, rng));
    CHECK_THROWS_AS((void)big.packed(), ivg::CapacityError);
}

TEST_CASE("graph6 encodes the frozen reference strings") {
    CHECK(ivg::to_graph6(Graph(0)) == "?");
    CHECK(ivg::to_graph6(Graph(1)) == "@");
    CHECK(ivg::to_graph6(test_util::graph_from_edges(2, {{0, 1}})) == "A_");
    CHECK(ivg::to_graph6(test_util::graph_from_edges(3, {{0, 1}, {1, 2}})) == "Bg");
    CHECK(ivg::to_graph6(test_util::graph_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})) == "Cl");
    CHECK(ivg::to_graph6(test_util::graph_from_edges(4, {{0, 1}, {0, 2}, {0, 3}})) == "Cs");
    CHECK(ivg::to_graph6(test_util::graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) ==
          "Dhc");
    const Graph petersen = test_util::graph_from_edges(
        10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9},
             {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
    CHECK(ivg::to_graph6(petersen) == "IheA@GUAo");
    const Graph g11 = test_util::graph_from_edges(
        11, {{0, 1}, {1, 2}, {2, 5}, {2, 10}, {3, 10}, {4, 5}, {4, 6}, {5, 9}, {6, 7}, {8, 10}});
    CHECK(ivg::to_graph6(g11) == "Jg?gOC?@@`?");
}

TEST_CASE("graph6 round-trip is the labelled identity (n <= 5, exhaustive)") {
    for (int n = 0; n <= 5; ++n) {
        const int slots = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
            const Graph g = test_util::graph_from_mask(n, mask);
            CHECK(ivg::from_graph6(ivg::to_graph6(g)) == g);
        }
    }
}

TEST_CASE("graph6 parse rejects malformed input") {
    CHECK_THROWS_AS((void)ivg::from_graph6(""), ivg::ParseError);
    CHECK_THROWS_AS((void)ivg::from_graph6("B"), ivg::ParseError);     // truncated
    CHECK_THROWS_AS((void)ivg::from_graph6("Bgg"), ivg::ParseError);   // trailing bytes
    CHECK_THROWS_AS((void)ivg::from_graph6("B\x20"), ivg::ParseError); // byte below 63
    CHECK_THROWS_AS((void)ivg::from_graph6("Bh"), ivg::ParseError);    // nonzero padding
    CHECK_THROWS_AS((void)ivg::from_graph6("a"), ivg::ParseError);     // 34 vertices
    CHECK_THROWS_AS((void)ivg::from_graph6("~??"), ivg::ParseError);   // long header
}
