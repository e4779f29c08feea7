#include <doctest.h>

#include <random>

#include "chroma/coloring.hpp"
#include "chroma/error.hpp"
#include "oracles.hpp"

using namespace chroma;

namespace {

std::vector<int> reference_c43() {
    std::vector<int> seq{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 0,
                         1, 4, 7, 10, 0, 3, 6, 9, 12, 2, 5, 8, 11, 1,
                         4, 8, 12, 3, 7, 11, 2, 6, 10, 1, 5, 9, 0, 4,
                         8};
    return seq;
}

std::vector<int> reference_c61() {
    return {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0,
            1, 4, 7, 10, 2, 5, 8, 0, 3, 6, 9, 1,
            4, 8, 1, 5, 9, 2, 6, 10, 3, 7, 0, 4,
            8, 2, 7, 1, 6, 0, 5, 10, 4, 9, 3, 8,
            2, 0, 9, 7, 5, 3, 1, 10, 8, 6, 4, 2,
            0};
}

std::vector<int> random_lengths(std::mt19937& rng, int lo, int hi) {
    std::vector<int> J;
    for (int l = lo; l <= hi; ++l)
        if (rng() % 3 == 0) J.push_back(l);
    if (J.empty()) J.push_back(lo);
    return J;
}

std::vector<int> random_surjection(std::mt19937& rng, int n, int k) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i < k ? i : static_cast<int>(rng() % k);
    std::shuffle(c.begin(), c.end(), rng);
    return c;
}

}

TEST_SUITE("coloring") {

TEST_CASE("colourings must be surjective and in range") {
    CHECK_THROWS_AS(VertexColoring(3, {0, 1, 1}), Error);
    CHECK_THROWS_AS(VertexColoring(2, {0, 2}), Error);
    CHECK(VertexColoring({0, 2, 1}).k() == 3);
}

TEST_CASE("the reference C43(1,2) colouring") {
    CirculantGraph g(43, {1, 2});
    auto r = verify_vertex_coloring(g, VertexColoring(13, reference_c43()));
    CHECK(r.proper);
    CHECK(r.complete);
    CHECK_FALSE(r.acyclic.has_value());
    CHECK(r.verified());
}

TEST_CASE("the reference C61(1,2) digraph colouring") {
    CirculantDigraph d(61, {1, 2});
    auto r = verify_digraph_coloring(d, VertexColoring(11, reference_c61()));
    CHECK(r.acyclic == true);
    CHECK(r.complete);
    CHECK(r.verified());
}

TEST_CASE("small vertex examples") {
    auto rainbow = verify_vertex_coloring(CirculantGraph(5, {1, 2}), VertexColoring(5, {0, 1, 2, 3, 4}));
    CHECK(rainbow.verified());

    auto constant = verify_vertex_coloring(CirculantGraph(3, {1}), VertexColoring(1, {0, 0, 0}));
    CHECK_FALSE(constant.proper);
    CHECK(constant.proper_violations.size() == 3);
    CHECK(constant.complete);

    auto missing = verify_vertex_coloring(CirculantGraph(6, {1}), VertexColoring(3, {0, 1, 0, 1, 0, 2}));
    CHECK(missing.proper);
    CHECK(missing.missing_pairs == std::vector<ColorPair>{{1, 2}});

    CHECK_THROWS_AS(verify_vertex_coloring(CirculantGraph(5, {1}), VertexColoring(2, {0, 1})), Error);
}

TEST_CASE("small digraph examples") {
    CirculantDigraph t(3, {1});
    auto two = verify_digraph_coloring(t, VertexColoring(2, {0, 1, 1}));
    CHECK(two.acyclic == true);
    CHECK(two.complete);

    auto one = verify_digraph_coloring(t, VertexColoring(1, {0, 0, 0}));
    CHECK(one.acyclic == false);
    CHECK(one.monochromatic_cycle == std::vector<int>{0, 1, 2});
    CHECK(one.proper); // arcs within a class are allowed; only cycles matter

    // a digon is a cycle
    auto digon = verify_digraph_coloring(CirculantDigraph(4, {1, 3}), VertexColoring(2, {0, 0, 1, 1}));
    CHECK(digon.acyclic == false);
    CHECK(digon.monochromatic_cycle.size() == 2);

    auto partial = verify_digraph_coloring(CirculantDigraph(4, {1}), VertexColoring(3, {0, 1, 2, 2}));
    CHECK(partial.acyclic == true);
    CHECK_FALSE(partial.complete);
    // arcs carry (0,1), (1,2), (2,2), (2,0)
    CHECK(partial.missing_pairs == std::vector<ColorPair>{{0, 2}, {1, 0}, {2, 1}});
}

TEST_CASE("edge colouring examples") {
    CirculantGraph tri(3, {1});
    std::map<Edge, int> rainbow{{{0, 1}, 0}, {{1, 2}, 1}, {{0, 2}, 2}};
    CHECK(verify_edge_coloring(tri, EdgeColoring(3, rainbow)).verified());

    CirculantGraph sq(4, {1});
    std::map<Edge, int> alt{{{0, 1}, 0}, {{1, 2}, 1}, {{2, 3}, 0}, {{0, 3}, 1}};
    CHECK(verify_edge_coloring(sq, EdgeColoring(2, alt)).verified());

    std::map<Edge, int> clash{{{0, 1}, 0}, {{1, 2}, 0}, {{2, 3}, 1}, {{0, 3}, 1}};
    auto r = verify_edge_coloring(sq, EdgeColoring(2, clash));
    CHECK_FALSE(r.proper);
    CHECK(r.proper_violations.size() == 2);
    REQUIRE(r.proper_violations[0].second.has_value());

    std::map<Edge, int> partial{{{0, 1}, 0}, {{1, 2}, 1}, {{2, 3}, 0}};
    try {
        verify_edge_coloring(sq, EdgeColoring(2, partial));
        FAIL("missing edge accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::KeySetMismatch);
    }
}

TEST_CASE("verifiers agree with the pair-table oracle on random instances") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        int n = std::uniform_int_distribution<int>(3, 20)(rng);
        int k = std::uniform_int_distribution<int>(1, std::min(n, 7))(rng);
        CAPTURE(trial);
        CAPTURE(n);
        CAPTURE(k);

        auto J = random_lengths(rng, 1, n / 2);
        auto c = random_surjection(rng, n, k);
        auto r = verify_vertex_coloring(CirculantGraph(n, J), VertexColoring(k, c));
        auto o = oracle::vertex(n, J, c, k);
        CHECK(r.proper == o.proper);
        CHECK(r.complete == o.complete);
        CHECK(r.proper_violations.size() == o.violations);
        CHECK(r.missing_pairs.size() == o.missing);

        auto K = random_lengths(rng, 1, n - 1);
        auto dr = verify_digraph_coloring(CirculantDigraph(n, K), VertexColoring(k, c));
        auto dorc = oracle::digraph(n, K, c, k);
        CHECK(dr.acyclic == dorc.acyclic);
        CHECK(dr.complete == dorc.complete);
        CHECK(dr.missing_pairs.size() == dorc.missing);
        if (!dorc.acyclic) {
            // the witness is a genuine monochromatic directed cycle
            auto& cyc = dr.monochromatic_cycle;
            REQUIRE(cyc.size() >= 2);
            CirculantDigraph d(n, K);
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
                CHECK(d.has_arc(u, v));
                CHECK(c[u] == c[v]);
            }
        }

        CirculantGraph g(n, J);
        auto edges = oracle::graph_edges(n, J);
        int ek = std::uniform_int_distribution<int>(1, std::min<int>(static_cast<int>(edges.size()), 8))(rng);
        auto ec = random_surjection(rng, static_cast<int>(edges.size()), ek);
        std::map<Edge, int> lib;
        std::map<std::pair<int, int>, int> ref;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            lib[Edge{edges[i].first, edges[i].second}] = ec[i];
            ref[edges[i]] = ec[i];
        }
        auto er = verify_edge_coloring(g, EdgeColoring(ek, lib));
        auto eo = oracle::edge(n, ref, ek);
        CHECK(er.proper == eo.proper);
        CHECK(er.complete == eo.complete);
        CHECK(er.missing_pairs.size() == eo.missing);
    }
}

TEST_CASE("merging two classes of a complete colouring keeps it complete") {
    std::mt19937 rng(11);
    int merged = 0;
    for (int trial = 0; trial < 400 && merged < 40; ++trial) {
        int n = std::uniform_int_distribution<int>(4, 16)(rng);
        auto J = random_lengths(rng, 1, n / 2);
        CirculantGraph g(n, J);
        int k = std::uniform_int_distribution<int>(2, std::min(n, 5))(rng);
        auto c = random_surjection(rng, n, k);
        if (!verify_vertex_coloring(g, VertexColoring(k, c)).complete) continue;
        int a = static_cast<int>(rng() % k), b = static_cast<int>(rng() % k);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        for (int& x : c) {
            if (x == b) x = a;
            else if (x > b) --x;
        }
        CHECK(verify_vertex_coloring(g, VertexColoring(k - 1, c)).complete);
        ++merged;
    }
    CHECK(merged >= 20);
}

}
