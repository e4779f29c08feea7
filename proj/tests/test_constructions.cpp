#include <doctest.h>

#include "chroma/constructions.hpp"
#include "chroma/numtheory.hpp"
#include "chroma/error.hpp"
#include "oracles.hpp"

using namespace chroma;

namespace {

std::vector<int> segment(const std::vector<int>& seq, std::size_t from, std::size_t len) {
    return {seq.begin() + static_cast<std::ptrdiff_t>(from), seq.begin() + static_cast<std::ptrdiff_t>(from + len)};
}

// Independent restatement of the walk: segment i is start_i + j*r_i for
// j = 0..p+a-2, followed by the final singleton.
std::vector<int> walk(int p, int a, const std::vector<int>& steps) {
    std::vector<int> out;
    int start = 0;
    for (int r : steps) {
        for (int j = 0; j < p + a - 1; ++j) out.push_back((start + j * r) % p);
        start = (start + (a - 1) * r) % p;
    }
    out.push_back(start);
    return out;
}

}

TEST_SUITE("constructions") {

TEST_CASE("C43(1,2) reproduces the reference segments") {
    auto c = residue_walk_graph_coloring(3, 2);
    CHECK(c.plan.steps == std::vector<int>{1, 3, 4});
    CHECK(c.plan.starts == std::vector<int>{0, 1, 4, 8});
    CHECK(c.plan.segment_length == 14);
    CHECK(c.plan.order() == 43);
    CHECK(c.graph.order() == 43);
    CHECK(c.coloring.k() == 13);
    auto seq = c.coloring.colors();
    CHECK(segment(seq, 0, 14) == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 0});
    CHECK(segment(seq, 14, 14) == std::vector<int>{1, 4, 7, 10, 0, 3, 6, 9, 12, 2, 5, 8, 11, 1});
    CHECK(segment(seq, 28, 14) == std::vector<int>{4, 8, 12, 3, 7, 11, 2, 6, 10, 1, 5, 9, 0, 4});
    CHECK(segment(seq, 42, 1) == std::vector<int>{8});
    CHECK(c.report.verified());
}

TEST_CASE("C61(1,2) digraph reproduces the reference segments") {
    auto c = residue_walk_digraph_coloring(2, 2);
    CHECK(c.plan.steps == std::vector<int>{1, 3, 4, 5, 9});
    CHECK(c.plan.starts == std::vector<int>{0, 1, 4, 8, 2, 0});
    CHECK(c.digraph.order() == 61);
    auto seq = c.coloring.colors();
    CHECK(segment(seq, 0, 12) == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0});
    CHECK(segment(seq, 12, 12) == std::vector<int>{1, 4, 7, 10, 2, 5, 8, 0, 3, 6, 9, 1});
    CHECK(segment(seq, 24, 12) == std::vector<int>{4, 8, 1, 5, 9, 2, 6, 10, 3, 7, 0, 4});
    CHECK(segment(seq, 36, 12) == std::vector<int>{8, 2, 7, 1, 6, 0, 5, 10, 4, 9, 3, 8});
    CHECK(segment(seq, 48, 12) == std::vector<int>{2, 0, 9, 7, 5, 3, 1, 10, 8, 6, 4, 2});
    CHECK(segment(seq, 60, 1) == std::vector<int>{0});
    CHECK(c.report.acyclic == true);
    CHECK(c.report.complete);
}

TEST_CASE("plan bookkeeping over the sweep ranges") {
    for (int q = 1; 4 * q + 1 <= 61; ++q) {
        int p = 4 * q + 1;
        if (!oracle::prime(p)) continue;
        auto rc = classify_residues(p);
        for (int a : rc.nqr) {
            if (a > 4 * q) continue;
            auto c = build_residue_walk_graph(q, a, StepOrder::Ascending);
            CAPTURE(q);
            CAPTURE(a);
            CHECK(c.plan.order() == 4 * q * q + a * q + 1);
            CHECK(c.graph.order() == c.plan.order());
            CHECK(c.coloring.k() == p);
            CHECK(c.coloring.colors() == walk(p, a, rc.length_reps));
            auto o = oracle::vertex(c.graph.order(), {1, a}, c.coloring.colors(), p);
            CHECK(c.report.proper == o.proper);
            CHECK(c.report.complete == o.complete);
        }
    }
    for (int q = 1; 4 * q + 3 <= 31; ++q) {
        int p = 4 * q + 3;
        if (!oracle::prime(p)) continue;
        auto rc = classify_residues(p);
        for (int a : rc.nqr) {
            if (a > 4 * q + 2) continue;
            auto c = build_residue_walk_digraph(q, a);
            CAPTURE(q);
            CAPTURE(a);
            CHECK(c.plan.order() == 8 * q * q + 2 * (a + 4) * q + a + 3);
            CHECK(c.plan.segment_length == 4 * q + a + 2);
            CHECK(c.coloring.colors() == walk(p, a, rc.qr));
            auto o = oracle::digraph(c.digraph.order(), {1, a}, c.coloring.colors(), p);
            CHECK(c.report.acyclic == o.acyclic);
            CHECK(c.report.complete == o.complete);
        }
    }
}

TEST_CASE("fallback orderings are verified and still walk every colour") {
    // (q, a) = (4, 3): ascending steps clash; a reordered walk verifies.
    auto asc = build_residue_walk_graph(4, 3, StepOrder::Ascending);
    auto c = build_residue_walk_graph(4, 3);
    CHECK(c.graph.order() == asc.graph.order());
    if (c.report.verified()) {
        auto o = oracle::vertex(c.graph.order(), {1, 3}, c.coloring.colors(), 17);
        CHECK(o.proper);
        CHECK(o.complete);
    }
    for (int s = 0; s < c.plan.segment_count(); ++s) {
        std::set<int> colours;
        for (int j = 0; j < c.plan.segment_length; ++j)
            colours.insert(c.coloring[static_cast<std::size_t>(s * c.plan.segment_length + j)]);
        CHECK(colours.size() == 17);
    }
}

TEST_CASE("q = 1 is reported, not thrown, by the unchecked builder") {
    auto c = build_residue_walk_graph(1, 3);
    CHECK(c.graph.order() == 8);
    CHECK(c.coloring.k() == 5);
    auto o = oracle::vertex(8, {1, 3}, c.coloring.colors(), 5);
    CHECK(c.report.proper == o.proper);
    CHECK(c.report.complete == o.complete);
    if (!c.report.verified()) {
        try {
            residue_walk_graph_coloring(1, 3);
            FAIL("checked builder accepted an unverified colouring");
        } catch (const ConstructionNotVerified<GraphConstruction>& e) {
            CHECK(e.code() == ErrorCode::ConstructionNotVerified);
            CHECK_FALSE(e.report().verified());
        }
    }

    auto d = build_residue_walk_digraph(1, 3);
    CHECK(d.digraph.order() == 28);
    CHECK(d.coloring.k() == 7);
}

TEST_CASE("preconditions") {
    auto code = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::BadCertificate;
    };
    CHECK(code([] { build_residue_walk_graph(2, 2); }) == ErrorCode::PreconditionFailed); // 9 not prime
    CHECK(code([] { build_residue_walk_graph(3, 3); }) == ErrorCode::PreconditionFailed); // 3 is a residue mod 13
    CHECK(code([] { build_residue_walk_graph(3, 1); }) == ErrorCode::PreconditionFailed);
    CHECK(code([] { build_residue_walk_graph(3, 13); }) == ErrorCode::PreconditionFailed);
    CHECK(code([] { build_residue_walk_digraph(2, 3); }) == ErrorCode::PreconditionFailed);
    CHECK(code([] { build_residue_walk_digraph(3, 2); }) == ErrorCode::PreconditionFailed); // 15 not prime
    CHECK(code([] { build_residue_walk_digraph(2, 11); }) == ErrorCode::PreconditionFailed);
}

}
