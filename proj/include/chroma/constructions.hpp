#pragma once

#include <vector>

#include "chroma/circulant.hpp"
#include "chroma/coloring.hpp"
#include "chroma/error.hpp"

namespace chroma {

/// Colour sequence built from residue walks in Z_p.
///
/// Segment i walks start_i, start_i + r_i, ..., start_i + (p-1) r_i and then
/// repeats its first a-1 colours; start_{i+1} = start_i + (a-1) r_i. A final
/// singleton segment holds the next start. Every segment visits all p colours.
struct ResidueWalkPlan {
    int p = 0;
    int a = 0;
    bool directed = false;
    std::vector<int> steps;
    std::vector<int> starts; // one per walk segment, plus the singleton's colour
    int segment_length = 0;  // p + a - 1

    int segment_count() const noexcept { return static_cast<int>(steps.size()); }
    int order() const noexcept { return segment_count() * segment_length + 1; }
    std::vector<int> sequence() const;
};

ResidueWalkPlan make_residue_walk_plan(int p, int a, bool directed, std::vector<int> steps);

struct GraphConstruction {
    ResidueWalkPlan plan;
    CirculantGraph graph;
    VertexColoring coloring;
    VerificationReport report;
};

struct DigraphConstruction {
    ResidueWalkPlan plan;
    CirculantDigraph digraph;
    VertexColoring coloring;
    VerificationReport report;
};

enum class StepOrder {
    Ascending,         // length representatives in ascending order only
    AscendingThenSearch, // fall back to a search over step orderings and signs
};

/// Builds C_{4q^2+aq+1}(1,a) with its (4q+1)-colouring. Never throws on a
/// failed verification; the report says what went wrong. Throws
/// PreconditionFailed when 4q+1 is not prime, a is a residue, or a is outside
/// 2..4q.
GraphConstruction build_residue_walk_graph(int q, int a, StepOrder order = StepOrder::AscendingThenSearch);

/// Builds C->_{8q^2+2(a+4)q+a+3}(1,a) with its (4q+3)-colouring. Throws
/// PreconditionFailed when 4q+3 is not prime, a is a residue, or a is outside
/// 2..4q+2.
DigraphConstruction build_residue_walk_digraph(int q, int a);

/// Thrown by the checked constructors; carries the failing construction.
template <typename Construction>
class ConstructionNotVerified : public Error {
public:
    explicit ConstructionNotVerified(Construction c)
        : Error(ErrorCode::ConstructionNotVerified, "generated colouring failed verification"),
          construction_(std::move(c)) {}

    const Construction& construction() const noexcept { return construction_; }
    const VerificationReport& report() const noexcept { return construction_.report; }

private:
    Construction construction_;
};

/// Checked variants: throw ConstructionNotVerified<...> unless the colouring
/// is proper and complete (acyclic and complete for digraphs).
GraphConstruction residue_walk_graph_coloring(int q, int a);
DigraphConstruction residue_walk_digraph_coloring(int q, int a);

} // namespace chroma
