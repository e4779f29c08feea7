#include <doctest.h>

#include <random>

#include "chroma/circulant.hpp"
#include "chroma/error.hpp"
#include "oracles.hpp"

using namespace chroma;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::BadCertificate; // sentinel: nothing thrown
}

}

TEST_SUITE("circulant") {

TEST_CASE("graph examples") {
    CirculantGraph g(43, {1, 2});
    CHECK(g.order() == 43);
    CHECK(g.degree() == 4);
    CHECK(g.edge_count() == 86);
    CHECK(g.edges().size() == 86);

    CirculantGraph k13(13, {1, 2, 3, 4, 5, 6});
    CHECK(k13.edge_count() == 78);
    for (int u = 0; u < 13; ++u)
        for (int v = 0; v < 13; ++v) CHECK(k13.adjacent(u, v) == (u != v));

    CirculantGraph c8(8, {3, 1});
    CHECK(c8.edge_count() == 16);
    CHECK(c8.degree() == 4);
    CHECK(std::vector<int>(c8.lengths().begin(), c8.lengths().end()) == std::vector<int>{1, 3});
}

TEST_CASE("diameter length on even n") {
    CirculantGraph g(8, {4});
    CHECK(g.edge_count() == 4);
    CHECK(g.degree() == 1);
    CirculantGraph h(10, {1, 5});
    CHECK(h.edge_count() == 15);
    CHECK(h.degree() == 3);
}

TEST_CASE("graph preconditions") {
    CHECK(code_of([] { CirculantGraph(13, {}); }) == ErrorCode::EmptyLengthSet);
    CHECK(code_of([] { CirculantGraph(13, {7}); }) == ErrorCode::LengthOutOfRange);
    CHECK(code_of([] { CirculantGraph(13, {0}); }) == ErrorCode::LengthOutOfRange);
    CHECK(code_of([] { CirculantGraph(2, {1}); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("digraph examples") {
    CirculantDigraph d(61, {1, 2});
    CHECK(d.arc_count() == 122);
    CHECK(d.arcs().size() == 122);

    CirculantDigraph t(3, {1});
    CHECK(t.arcs() == std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});

    CirculantDigraph s(11, {1, 10});
    CHECK(s.arc_count() == 22);
    for (int u = 0; u < 11; ++u)
        for (int v = 0; v < 11; ++v) CHECK(s.has_arc(u, v) == s.has_arc(v, u));

    CHECK(code_of([] { CirculantDigraph(5, {5}); }) == ErrorCode::LengthOutOfRange);
    CHECK(code_of([] { CirculantDigraph(5, {}); }) == ErrorCode::EmptyLengthSet);
}

TEST_CASE("complete graph for J = 1..n/2 on odd n") {
    for (int n = 3; n <= 31; n += 2) {
        std::vector<int> J;
        for (int l = 1; l <= n / 2; ++l) J.push_back(l);
        CHECK(CirculantGraph(n, J).edge_count() == std::int64_t{n} * (n - 1) / 2);
    }
}

TEST_CASE("random instances agree with the explicit edge list") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(3, 50)(rng);
        std::vector<int> J;
        for (int l = 1; l <= n / 2; ++l)
            if (rng() % 3 == 0) J.push_back(l);
        if (J.empty()) J.push_back(1 + static_cast<int>(rng() % (n / 2)));
        CirculantGraph g(n, J);
        auto expected = oracle::graph_edges(n, J);
        auto edges = g.edges();
        CAPTURE(n);
        REQUIRE(static_cast<std::int64_t>(edges.size()) == g.edge_count());
        std::set<std::pair<int, int>> got;
        for (Edge e : edges) {
            CHECK(e.u < e.v);
            got.emplace(e.u, e.v);
        }
        CHECK(got == std::set<std::pair<int, int>>(expected.begin(), expected.end()));
        for (int u = 0; u < n; ++u) {
            CHECK(static_cast<int>(g.neighbors(u).size()) == g.degree());
            for (int v = 0; v < n; ++v)
                CHECK(g.adjacent(u, v) == got.contains({std::min(u, v), std::max(u, v)}));
        }

        std::vector<int> K;
        for (int l = 1; l < n; ++l)
            if (rng() % 4 == 0) K.push_back(l);
        if (K.empty()) K.push_back(1);
        CirculantDigraph d(n, K);
        auto arcs = oracle::digraph_arcs(n, K);
        REQUIRE(static_cast<std::int64_t>(arcs.size()) == d.arc_count());
        std::set<std::pair<int, int>> arcset(arcs.begin(), arcs.end());
        for (Arc a : d.arcs()) CHECK(arcset.contains({a.tail, a.head}));
        for (int u = 0; u < n; ++u) {
            CHECK(d.out_neighbors(u).size() == K.size());
            CHECK(d.in_neighbors(u).size() == K.size());
        }
    }
}

TEST_CASE("edge order is by smaller endpoint, then length") {
    CirculantGraph g(7, {1, 3});
    auto e = g.edges();
    REQUIRE(e.size() == 14);
    CHECK(e[0] == Edge{0, 1});
    CHECK(e[1] == Edge{0, 6});
    CHECK(e[2] == Edge{0, 3});
    CHECK(e[3] == Edge{0, 4});
}

}
