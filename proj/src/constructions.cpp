#include "chroma/constructions.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "chroma/numtheory.hpp"

namespace chroma {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw Error(ErrorCode::PreconditionFailed, message);
}

ResidueClassification check_walk_parameters(int q, int a, int p, int max_a) {
    require(q >= 0 && is_prime(p) && p > 2, "modulus " + std::to_string(p) + " is not an odd prime");
    require(a >= 2 && a <= max_a, "a must lie in 2.." + std::to_string(max_a));
    auto rc = classify_residues(p);
    require(!rc.is_residue(a), std::to_string(a) + " is a quadratic residue mod " + std::to_string(p));
    return rc;
}

GraphConstruction assemble_graph(ResidueWalkPlan plan) {
    auto colors = plan.sequence();
    CirculantGraph g(static_cast<int>(colors.size()), {1, plan.a});
    VertexColoring c(plan.p, std::move(colors));
    auto report = verify_vertex_coloring(g, c);
    return {std::move(plan), std::move(g), std::move(c), std::move(report)};
}

/// Length-a edges that cross from segment i into segment i+1 join colours
/// start_i + (s-1) r_i and start_i + (a-1) r_i + s r_{i+1}, s = 1..a-1.
bool boundary_clash(int p, int a, int prev, int next) {
    for (int s = 1; s < a; ++s) {
        if (mod(std::int64_t{a - s} * prev + std::int64_t{s} * next, p) == 0) return true;
    }
    return false;
}

/// The wrap from the last walk segment through the singleton into the first
/// segment (whose start is 0).
bool wrap_clash(int p, int a, const std::vector<int>& steps) {
    std::int64_t last_start = 0;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) last_start += std::int64_t{a - 1} * steps[i];
    const int r_last = steps.back();
    const int r_first = steps.front();
    for (int u = 0; u <= a - 2; ++u) {
        if (mod(last_start + std::int64_t{u} * r_last - std::int64_t{u} * r_first, p) == 0) return true;
    }
    const int single = mod(last_start + std::int64_t{a - 1} * r_last, p);
    return single == 0 || single == mod(std::int64_t{a - 1} * r_first, p);
}

class StepSearch {
public:
    StepSearch(int p, int a, std::vector<int> reps) : p_(p), a_(a), reps_(std::move(reps)), used_(reps_.size(), false) {}

    std::optional<GraphConstruction> run() {
        chosen_.clear();
        return extend();
    }

private:
    std::optional<GraphConstruction> extend() {
        if (chosen_.size() == reps_.size()) {
            if (wrap_clash(p_, a_, chosen_)) return std::nullopt;
            auto built = assemble_graph(make_residue_walk_plan(p_, a_, false, chosen_));
            if (built.report.verified()) return built;
            return std::nullopt;
        }
        for (std::size_t i = 0; i < reps_.size(); ++i) {
            if (used_[i]) continue;
            for (int step : {reps_[i], p_ - reps_[i]}) {
                if (!chosen_.empty() && boundary_clash(p_, a_, chosen_.back(), step)) continue;
                used_[i] = true;
                chosen_.push_back(step);
                auto found = extend();
                chosen_.pop_back();
                used_[i] = false;
                if (found) return found;
            }
        }
        return std::nullopt;
    }

    int p_;
    int a_;
    std::vector<int> reps_;
    std::vector<bool> used_;
    std::vector<int> chosen_;
};

} // namespace

std::vector<int> ResidueWalkPlan::sequence() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(order()));
    for (std::size_t i = 0; i < steps.size(); ++i) {
        for (int j = 0; j < segment_length; ++j) {
            out.push_back(mod(starts[i] + std::int64_t{j % p} * steps[i], p));
        }
    }
    out.push_back(starts.back());
    return out;
}

ResidueWalkPlan make_residue_walk_plan(int p, int a, bool directed, std::vector<int> steps) {
    ResidueWalkPlan plan;
    plan.p = p;
    plan.a = a;
    plan.directed = directed;
    plan.steps = std::move(steps);
    plan.segment_length = p + a - 1;
    int start = 0;
    for (int r : plan.steps) {
        plan.starts.push_back(start);
        start = mod(start + std::int64_t{a - 1} * r, p);
    }
    plan.starts.push_back(start);
    return plan;
}

GraphConstruction build_residue_walk_graph(int q, int a, StepOrder order) {
    require(q >= 1, "q must be positive");
    const int p = 4 * q + 1;
    auto rc = check_walk_parameters(q, a, p, 4 * q);

    auto literal = assemble_graph(make_residue_walk_plan(p, a, false, rc.length_reps));
    if (literal.report.verified() || order == StepOrder::Ascending) return literal;

    if (auto found = StepSearch(p, a, rc.length_reps).run()) return std::move(*found);
    return literal;
}

DigraphConstruction build_residue_walk_digraph(int q, int a) {
    const int p = 4 * q + 3;
    auto rc = check_walk_parameters(q, a, p, 4 * q + 2);

    auto plan = make_residue_walk_plan(p, a, true, rc.qr);
    auto colors = plan.sequence();
    CirculantDigraph d(static_cast<int>(colors.size()), {1, a});
    VertexColoring c(p, std::move(colors));
    auto report = verify_digraph_coloring(d, c);
    return {std::move(plan), std::move(d), std::move(c), std::move(report)};
}

GraphConstruction residue_walk_graph_coloring(int q, int a) {
    auto built = build_residue_walk_graph(q, a);
    if (!built.report.verified()) throw ConstructionNotVerified<GraphConstruction>(std::move(built));
    return built;
}

DigraphConstruction residue_walk_digraph_coloring(int q, int a) {
    auto built = build_residue_walk_digraph(q, a);
    if (!built.report.verified()) throw ConstructionNotVerified<DigraphConstruction>(std::move(built));
    return built;
}

} // namespace chroma
