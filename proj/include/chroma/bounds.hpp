#pragma once

#include <cstdint>
#include <vector>

namespace chroma {

enum class GraphKind { Graph, Digraph };

/// floor(1/2 + sqrt(1/4 + 2m)) for graphs and floor(1/2 + sqrt(1/4 + m)) for
/// digraphs, in exact integer arithmetic: the largest k with k(k-1)/2 <= m,
/// respectively k(k-1) <= m.
std::int64_t size_upper_bound(std::int64_t m, GraphKind kind);

struct FgRow {
    std::int64_t x = 0;
    std::int64_t f_floor = 0;
    std::int64_t g = 0;
    std::int64_t min = 0;
};

/// Upper bounds for an r-regular graph on n vertices. The fg bound caps the
/// achromatic index; the eq2/eq3 bounds use the graph size m = nr/2 and
/// `index_eq2_bound` applies the size bound to the line graph.
struct BoundProfile {
    std::int64_t n = 0;
    std::int64_t r = 0;
    std::int64_t m = 0;
    std::int64_t eq2_bound = 0;
    std::int64_t eq3_bound = 0;
    std::int64_t index_eq2_bound = 0;
    std::int64_t fg_bound = 0;
    std::int64_t fg_argmax_x = 0;
    std::vector<FgRow> fg_table;
};

/// f(x) = nr / 2x; g(x) = 2x(r-1)+1 if r < n-2x, else x(n-2x+r-1)+1.
std::int64_t fg_f_floor(std::int64_t n, std::int64_t r, std::int64_t x);
std::int64_t fg_g(std::int64_t n, std::int64_t r, std::int64_t x);

/// max over integer x in 1..floor(nr/2) of min(floor f(x), g(x)). Requires
/// n >= 3 and 1 <= r <= n-1 (PreconditionFailed otherwise).
BoundProfile fg_upper_bound(std::int64_t n, std::int64_t r);

/// Achromatic number (and index) of the cycle C_n:
/// max{k : k*floor(k/2) <= n} - s(n), s(n) = #{x >= 1 : 2x^2 + x + 1 = n}.
std::int64_t cycle_achromatic(std::int64_t n);

std::int64_t isqrt(std::int64_t x);

} // namespace chroma
