#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "chroma/circulant.hpp"

namespace chroma {

using ColorPair = std::pair<int, int>;

/// Surjective assignment of colours 0..k-1 to vertices 0..n-1.
class VertexColoring {
public:
    /// Throws PreconditionFailed if a colour falls outside 0..k-1 or a colour
    /// in that range is never used.
    VertexColoring(int k, std::vector<int> colors);
    /// k is taken as max colour + 1.
    explicit VertexColoring(std::vector<int> colors);

    int k() const noexcept { return k_; }
    std::size_t size() const noexcept { return colors_.size(); }
    int operator[](std::size_t v) const { return colors_[v]; }
    const std::vector<int>& colors() const noexcept { return colors_; }

private:
    int k_;
    std::vector<int> colors_;
};

/// Surjective assignment of colours 0..k-1 to canonical edges.
class EdgeColoring {
public:
    EdgeColoring(int k, std::map<Edge, int> colors);

    int k() const noexcept { return k_; }
    const std::map<Edge, int>& colors() const noexcept { return colors_; }
    int at(Edge e) const { return colors_.at(e); }

private:
    int k_;
    std::map<Edge, int> colors_;
};

/// A properness violation: an edge with equally coloured endpoints (vertex
/// colourings) or two equally coloured edges sharing a vertex (edge colourings).
struct Conflict {
    Edge first;
    std::optional<Edge> second;
    auto operator<=>(const Conflict&) const = default;
};

struct VerificationReport {
    bool proper = true;
    bool complete = true;
    std::optional<bool> acyclic; // only meaningful for digraphs
    std::vector<Conflict> proper_violations;
    std::vector<ColorPair> missing_pairs; // unordered (i < j) for graphs, ordered for digraphs
    std::vector<int> monochromatic_cycle;  // v0 -> v1 -> ... -> v0 (first vertex not repeated)

    bool verified() const noexcept { return proper && complete && acyclic.value_or(true); }
};

/// Proper: no edge joins equal colours. Complete: every unordered pair of
/// distinct colours is carried by some edge. Throws SizeMismatch.
VerificationReport verify_vertex_coloring(const CirculantGraph& g, const VertexColoring& c);

/// Acyclic: no colour class induces a directed cycle (digons included).
/// Complete: every ordered pair (i, j), i != j, is carried by an arc.
VerificationReport verify_digraph_coloring(const CirculantDigraph& d, const VertexColoring& c);

/// Proper: edges sharing a vertex differ. Complete: every unordered colour pair
/// meets at some vertex. Throws KeySetMismatch unless keys are exactly E(G).
VerificationReport verify_edge_coloring(const CirculantGraph& g, const EdgeColoring& c);

} // namespace chroma
