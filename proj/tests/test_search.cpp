#include <doctest.h>

#include <random>

#include "chroma/search.hpp"
#include "chroma/bounds.hpp"
#include "chroma/error.hpp"
#include "oracles.hpp"

using namespace chroma;
using namespace std::chrono_literals;

namespace {

void check_vertex_witness(const CirculantGraph& g, const ExtremalResult& r, bool needs_complete) {
    std::vector<int> J(g.lengths().begin(), g.lengths().end());
    REQUIRE(r.witness.size() == static_cast<std::size_t>(g.order()));
    auto v = oracle::vertex(g.order(), J, r.witness, r.value);
    CHECK(v.proper);
    if (needs_complete) CHECK(v.complete);
}

void check_digraph_witness(const CirculantDigraph& d, const ExtremalResult& r, bool needs_complete) {
    std::vector<int> J(d.lengths().begin(), d.lengths().end());
    REQUIRE(r.witness.size() == static_cast<std::size_t>(d.order()));
    auto v = oracle::digraph(d.order(), J, r.witness, r.value);
    CHECK(v.acyclic);
    if (needs_complete) CHECK(v.complete);
}

int brute_alpha(int n, const std::vector<int>& J) {
    return oracle::max_complete(n, [&](const std::vector<int>& c, int k) {
        auto v = oracle::vertex(n, J, c, k);
        return v.proper && v.complete;
    });
}

int brute_dac(int n, const std::vector<int>& J) {
    return oracle::max_complete(n, [&](const std::vector<int>& c, int k) {
        auto v = oracle::digraph(n, J, c, k);
        return v.acyclic && v.complete;
    });
}

int brute_chi(int n, const std::vector<int>& J) {
    return oracle::min_good(n, [&](const std::vector<int>& c, int k) { return oracle::vertex(n, J, c, k).proper; });
}

}

TEST_SUITE("search") {

TEST_CASE("achromatic examples") {
    // Lengths 1 and 3 reach every odd distance mod 8, so C8(1,3) is K_{4,4}:
    // classes on one side are never adjacent, hence only two colours.
    CHECK(CirculantGraph(8, {1, 3}).edge_count() == 16);
    CHECK(brute_alpha(8, {1, 3}) == 2);
    auto r = exact_achromatic(CirculantGraph(8, {1, 3}));
    CHECK(r.value == 2);
    CHECK(r.proof_of_optimality);
    CHECK(r.status == SearchStatus::Exhausted);
    check_vertex_witness(CirculantGraph(8, {1, 3}), r, true);
    CHECK(exact_achromatic(CirculantGraph(5, {1})).value == 3);
    CHECK(exact_achromatic(CirculantGraph(4, {1})).value == 2);
}

TEST_CASE("diachromatic examples") {
    CHECK(exact_diachromatic(CirculantDigraph(3, {1})).value == 2);
    CHECK(exact_diachromatic(CirculantDigraph(4, {1})).value == 2);
    CHECK(exact_diachromatic(CirculantDigraph(2, {1})).value == 2);
}

TEST_CASE("achromatic index examples") {
    CHECK(exact_achromatic_index(CirculantGraph(5, {1})).value == 3);
    CHECK(exact_achromatic_index(CirculantGraph(3, {1})).value == 3);
    CHECK(exact_achromatic_index(CirculantGraph(4, {1})).value == 2);
    CHECK(exact_achromatic_index(CirculantGraph(4, {1, 2})).value == 3); // K4
    auto g = CirculantGraph(6, {1, 2});
    auto r = exact_achromatic_index(g);
    auto c = edge_witness(g, r);
    CHECK(c.k() == r.value);
    CHECK(verify_edge_coloring(g, c).verified());
}

TEST_CASE("achromatic index agrees with plain enumeration over edges") {
    for (auto [n, J] : std::vector<std::pair<int, std::vector<int>>>{{5, {1, 2}}, {8, {2}}, {6, {1, 3}}}) {
        CirculantGraph g(n, J);
        auto edges = g.edges();
        int expected = oracle::max_complete(static_cast<int>(edges.size()), [&](const std::vector<int>& c, int k) {
            std::map<std::pair<int, int>, int> m;
            for (std::size_t i = 0; i < edges.size(); ++i) m[{edges[i].u, edges[i].v}] = c[i];
            auto v = oracle::edge(n, m, k);
            return v.proper && v.complete;
        });
        CAPTURE(n);
        auto r = exact_achromatic_index(g);
        CHECK(r.value == expected);
        CHECK(verify_edge_coloring(g, edge_witness(g, r)).verified());
    }
    CHECK(exact_achromatic_index(CirculantGraph(5, {1, 2})).value == 7); // K5
}

TEST_CASE("chromatic examples") {
    CHECK(exact_chromatic_numbers(CirculantGraph(5, {1})).value == 3);
    CHECK(exact_chromatic_numbers(CirculantDigraph(3, {1})).value == 2);
    SearchBudget wide;
    wide.max_vertices = 13;
    auto k13 = exact_chromatic_numbers(CirculantGraph(13, {1, 2, 3, 4, 5, 6}), wide);
    CHECK(k13.value == 13);
    CHECK(k13.proof_of_optimality);
}

TEST_CASE("cycles match the closed form") {
    for (int n = 3; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(exact_achromatic(CirculantGraph(n, {1})).value == cycle_achromatic(n));
        CHECK(exact_achromatic_index(CirculantGraph(n, {1})).value == cycle_achromatic(n));
    }
}

TEST_CASE("agrees with plain enumeration on small instances") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        int n = std::uniform_int_distribution<int>(3, 8)(rng);
        std::vector<int> J;
        for (int l = 1; l <= n / 2; ++l)
            if (rng() % 2) J.push_back(l);
        if (J.empty()) J.push_back(1);
        CAPTURE(n);
        CirculantGraph g(n, J);
        auto a = exact_achromatic(g);
        CHECK(a.value == brute_alpha(n, J));
        check_vertex_witness(g, a, true);
        auto chi = exact_chromatic_numbers(g);
        CHECK(chi.value == brute_chi(n, J));
        check_vertex_witness(g, chi, false);

        std::vector<int> K;
        for (int l = 1; l < n; ++l)
            if (rng() % 3 == 0) K.push_back(l);
        if (K.empty()) K.push_back(1);
        CirculantDigraph d(n, K);
        auto dac = exact_diachromatic(d);
        CHECK(dac.value == brute_dac(n, K));
        check_digraph_witness(d, dac, true);
    }
}

TEST_CASE("sandwich and size-bound consistency") {
    std::vector<std::pair<int, std::vector<int>>> graphs{
        {8, {1, 3}}, {9, {1, 2}}, {10, {1, 4}}, {10, {2, 5}}, {11, {1, 3}}, {12, {1, 5}}, {7, {1, 2, 3}}};
    for (auto& [n, J] : graphs) {
        CirculantGraph g(n, J);
        auto a = exact_achromatic(g);
        auto chi = exact_chromatic_numbers(g);
        CAPTURE(n);
        CHECK(chi.value <= a.value);
        CHECK(a.value <= size_upper_bound(g.edge_count(), GraphKind::Graph));
        check_vertex_witness(g, a, true);
    }
    std::vector<std::pair<int, std::vector<int>>> digraphs{{7, {1, 2}}, {8, {1, 3}}, {9, {1, 2, 4}}, {10, {1, 5}}};
    for (auto& [n, J] : digraphs) {
        CirculantDigraph d(n, J);
        auto dac = exact_diachromatic(d);
        auto dc = exact_chromatic_numbers(d);
        CHECK(dc.value <= dac.value);
        CHECK(dac.value <= size_upper_bound(d.arc_count(), GraphKind::Digraph));
        check_digraph_witness(d, dac, true);
        check_digraph_witness(d, dc, false);
    }
}

TEST_CASE("threads do not change the value") {
    CirculantGraph g(11, {1, 3});
    SearchBudget one, four;
    four.threads = 4;
    auto a = exact_achromatic(g, one);
    auto b = exact_achromatic(g, four);
    CHECK(a.value == b.value);
    CHECK(b.proof_of_optimality);
    check_vertex_witness(g, b, true);
}

TEST_CASE("budgets") {
    auto code = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::BadCertificate;
    };
    CHECK(code([] { exact_achromatic(CirculantGraph(13, {1})); }) == ErrorCode::BudgetExceeded);
    CHECK(code([] { exact_diachromatic(CirculantDigraph(13, {1})); }) == ErrorCode::BudgetExceeded);
    CHECK(code([] { exact_achromatic_index(CirculantGraph(10, {1, 2})); }) == ErrorCode::BudgetExceeded);
    CHECK(code([] { exact_chromatic_numbers(CirculantGraph(13, {1})); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("time limit returns a flagged best-found colouring") {
    SearchBudget tight;
    tight.max_vertices = 40;
    tight.time_limit = 0.05s;
    CirculantGraph g(40, {1, 2, 5});
    auto r = exact_achromatic(g, tight);
    CHECK_FALSE(r.proof_of_optimality);
    CHECK(r.status == SearchStatus::TimeLimit);
    CHECK(r.value >= 1);
    check_vertex_witness(g, r, true);
}

}
