#include "chroma/coloring.hpp"

#include <algorithm>
#include <string>

#include "chroma/error.hpp"

namespace chroma {

namespace {

void check_surjective(int k, const std::vector<int>& used_colors, const char* what) {
    if (k < 1) throw Error(ErrorCode::PreconditionFailed, std::string(what) + ": k must be positive");
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int c : used_colors) {
        if (c < 0 || c >= k) {
            throw Error(ErrorCode::PreconditionFailed,
                        std::string(what) + ": colour " + std::to_string(c) + " outside 0.." +
                            std::to_string(k - 1));
        }
        seen[static_cast<std::size_t>(c)] = true;
    }
    auto missing = std::find(seen.begin(), seen.end(), false);
    if (missing != seen.end()) {
        throw Error(ErrorCode::PreconditionFailed,
                    std::string(what) + ": colour " + std::to_string(missing - seen.begin()) +
                        " is never used");
    }
}

/// k x k table of realized colour pairs.
class PairTable {
public:
    explicit PairTable(int k) : k_(k), seen_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0) {}

    void mark(int i, int j) { seen_[index(i, j)] = 1; }
    void mark_unordered(int i, int j) {
        mark(i, j);
        mark(j, i);
    }

    std::vector<ColorPair> missing(bool ordered) const {
        std::vector<ColorPair> out;
        for (int i = 0; i < k_; ++i) {
            for (int j = ordered ? 0 : i + 1; j < k_; ++j) {
                if (i != j && !seen_[index(i, j)]) out.emplace_back(i, j);
            }
        }
        return out;
    }

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(j);
    }

    int k_;
    std::vector<char> seen_;
};

/// First directed cycle inside a colour class, found by iterative DFS.
std::vector<int> find_monochromatic_cycle(const CirculantDigraph& d, const VertexColoring& c) {
    const int n = d.order();
    enum : char { White, Gray, Black };
    std::vector<char> state(static_cast<std::size_t>(n), White);
    std::vector<std::pair<int, std::size_t>> stack;

    for (int root = 0; root < n; ++root) {
        if (state[static_cast<std::size_t>(root)] != White) continue;
        stack.emplace_back(root, 0);
        state[static_cast<std::size_t>(root)] = Gray;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            auto lengths = d.lengths();
            if (next == lengths.size()) {
                state[static_cast<std::size_t>(v)] = Black;
                stack.pop_back();
                continue;
            }
            int w = mod(std::int64_t{v} + lengths[next++], n);
            if (c[static_cast<std::size_t>(w)] != c[static_cast<std::size_t>(v)]) continue;
            if (state[static_cast<std::size_t>(w)] == Gray) {
                auto from = std::find_if(stack.begin(), stack.end(), [w](const auto& f) { return f.first == w; });
                std::vector<int> cycle;
                for (auto it = from; it != stack.end(); ++it) cycle.push_back(it->first);
                return cycle;
            }
            if (state[static_cast<std::size_t>(w)] == White) {
                state[static_cast<std::size_t>(w)] = Gray;
                stack.emplace_back(w, 0);
            }
        }
    }
    return {};
}

} // namespace

VertexColoring::VertexColoring(int k, std::vector<int> colors) : k_(k), colors_(std::move(colors)) {
    check_surjective(k_, colors_, "vertex colouring");
}

namespace {
int color_count(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}
} // namespace

// k must be read before `colors` is moved from; argument order is unspecified.
VertexColoring::VertexColoring(std::vector<int> colors) : k_(color_count(colors)), colors_(std::move(colors)) {
    check_surjective(k_, colors_, "vertex colouring");
}

EdgeColoring::EdgeColoring(int k, std::map<Edge, int> colors) : k_(k), colors_(std::move(colors)) {
    std::vector<int> used;
    used.reserve(colors_.size());
    for (const auto& [e, col] : colors_) used.push_back(col);
    check_surjective(k_, used, "edge colouring");
}

VerificationReport verify_vertex_coloring(const CirculantGraph& g, const VertexColoring& c) {
    if (c.size() != static_cast<std::size_t>(g.order())) {
        throw Error(ErrorCode::SizeMismatch, "colouring has " + std::to_string(c.size()) +
                                                 " entries for " + std::to_string(g.order()) + " vertices");
    }
    VerificationReport report;
    PairTable pairs(c.k());
    for (Edge e : g.edges()) {
        int cu = c[static_cast<std::size_t>(e.u)];
        int cv = c[static_cast<std::size_t>(e.v)];
        if (cu == cv) {
            report.proper_violations.push_back({e, std::nullopt});
        } else {
            pairs.mark_unordered(cu, cv);
        }
    }
    report.missing_pairs = pairs.missing(false);
    report.proper = report.proper_violations.empty();
    report.complete = report.missing_pairs.empty();
    return report;
}

VerificationReport verify_digraph_coloring(const CirculantDigraph& d, const VertexColoring& c) {
    if (c.size() != static_cast<std::size_t>(d.order())) {
        throw Error(ErrorCode::SizeMismatch, "colouring has " + std::to_string(c.size()) +
                                                 " entries for " + std::to_string(d.order()) + " vertices");
    }
    VerificationReport report;
    PairTable pairs(c.k());
    for (Arc a : d.arcs()) {
        int ct = c[static_cast<std::size_t>(a.tail)];
        int ch = c[static_cast<std::size_t>(a.head)];
        if (ct != ch) pairs.mark(ct, ch);
    }
    report.missing_pairs = pairs.missing(true);
    report.complete = report.missing_pairs.empty();
    report.monochromatic_cycle = find_monochromatic_cycle(d, c);
    report.acyclic = report.monochromatic_cycle.empty();
    return report;
}

VerificationReport verify_edge_coloring(const CirculantGraph& g, const EdgeColoring& c) {
    const auto edges = g.edges();
    const auto& assignment = c.colors();
    bool keys_match = edges.size() == assignment.size() &&
                      std::all_of(edges.begin(), edges.end(), [&](Edge e) { return assignment.contains(e); });
    if (!keys_match) {
        throw Error(ErrorCode::KeySetMismatch, "edge colouring keys differ from the edge set of the graph");
    }

    VerificationReport report;
    PairTable pairs(c.k());
    const int n = g.order();
    std::vector<std::pair<int, Edge>> incident;
    for (int w = 0; w < n; ++w) {
        incident.clear();
        for (int x : g.neighbors(w)) {
            Edge e = Edge::canonical(w, x);
            incident.emplace_back(assignment.at(e), e);
        }
        std::sort(incident.begin(), incident.end());
        for (std::size_t i = 0; i < incident.size(); ++i) {
            for (std::size_t j = i + 1; j < incident.size(); ++j) {
                if (incident[i].first == incident[j].first) {
                    report.proper_violations.push_back({incident[i].second, incident[j].second});
                } else {
                    pairs.mark_unordered(incident[i].first, incident[j].first);
                }
            }
        }
    }
    report.missing_pairs = pairs.missing(false);
    report.proper = report.proper_violations.empty();
    report.complete = report.missing_pairs.empty();
    return report;
}

} // namespace chroma
