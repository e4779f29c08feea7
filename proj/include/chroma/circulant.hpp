#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace chroma {

/// Undirected edge with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    static Edge canonical(int a, int b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }
    auto operator<=>(const Edge&) const = default;
};

struct Arc {
    int tail = 0;
    int head = 0;
    auto operator<=>(const Arc&) const = default;
};

/// C_n(J): vertices Z_n, u ~ v iff the circular distance of u and v lies in J.
/// Edges are implicit; `edges()` materializes them in canonical order (by
/// smaller endpoint, then length, then larger endpoint).
class CirculantGraph {
public:
    /// Requires n >= 3 and a nonempty J within 1..floor(n/2). Duplicate lengths
    /// are merged.
    CirculantGraph(int n, std::vector<int> lengths);

    int order() const noexcept { return n_; }
    std::span<const int> lengths() const noexcept { return lengths_; }

    /// Circular distance min(|u-v| mod n, n - |u-v| mod n).
    int distance(int u, int v) const noexcept;
    bool adjacent(int u, int v) const noexcept;
    bool has_length(int length) const noexcept;

    int degree() const noexcept;
    std::int64_t edge_count() const noexcept;

    std::vector<int> neighbors(int u) const;
    std::vector<Edge> edges() const;

private:
    int n_;
    std::vector<int> lengths_;
    std::vector<bool> length_mask_;
};

/// Directed circulant: arc u -> v iff (v - u) mod n lies in J.
class CirculantDigraph {
public:
    /// Requires n >= 2 and a nonempty J within 1..n-1.
    CirculantDigraph(int n, std::vector<int> lengths);

    int order() const noexcept { return n_; }
    std::span<const int> lengths() const noexcept { return lengths_; }

    bool has_arc(int tail, int head) const noexcept;
    std::int64_t arc_count() const noexcept { return std::int64_t{n_} * static_cast<std::int64_t>(lengths_.size()); }

    std::vector<int> out_neighbors(int u) const;
    std::vector<int> in_neighbors(int u) const;
    /// Arcs ordered by tail, then length.
    std::vector<Arc> arcs() const;

private:
    int n_;
    std::vector<int> lengths_;
    std::vector<bool> length_mask_;
};

inline int mod(std::int64_t x, int n) noexcept {
    auto r = static_cast<int>(x % n);
    return r < 0 ? r + n : r;
}

} // namespace chroma
