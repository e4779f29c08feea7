#include "chroma/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "chroma/bounds.hpp"
#include "chroma/error.hpp"

namespace chroma {

namespace {

using Clock = std::chrono::steady_clock;

/// Colour the elements 0..size-1 so that every class respects the local rule
/// (linked elements differ, or classes stay acyclic along directed links)
/// and, when asked, every colour pair is carried by some link.
struct Problem {
    int size = 0;
    bool ordered = false;
    bool proper = true;
    bool acyclic = false;
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in; // only for ordered problems
    std::int64_t link_count = 0;
    std::int64_t complete_bound = 0; // size bound on any complete colouring
    std::vector<int> anchor_orbit;    // elements a rotation can move to element 0
};

Problem vertex_problem(const CirculantGraph& g) {
    Problem pb;
    pb.size = g.order();
    for (int v = 0; v < pb.size; ++v) pb.out.push_back(g.neighbors(v));
    pb.link_count = g.edge_count();
    pb.complete_bound = std::min<std::int64_t>(pb.size, size_upper_bound(pb.link_count, GraphKind::Graph));
    for (int v = 0; v < pb.size; ++v) pb.anchor_orbit.push_back(v);
    return pb;
}

Problem digraph_problem(const CirculantDigraph& d) {
    Problem pb;
    pb.size = d.order();
    pb.ordered = true;
    pb.proper = false;
    pb.acyclic = true;
    for (int v = 0; v < pb.size; ++v) {
        pb.out.push_back(d.out_neighbors(v));
        pb.in.push_back(d.in_neighbors(v));
    }
    pb.link_count = d.arc_count();
    pb.complete_bound = std::min<std::int64_t>(pb.size, size_upper_bound(pb.link_count, GraphKind::Digraph));
    for (int v = 0; v < pb.size; ++v) pb.anchor_orbit.push_back(v);
    return pb;
}

/// The line graph of g, elements indexed like g.edges().
Problem edge_problem(const CirculantGraph& g) {
    const auto edges = g.edges();
    Problem pb;
    pb.size = static_cast<int>(edges.size());
    pb.out.resize(edges.size());
    std::vector<std::vector<int>> at_vertex(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        at_vertex[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<int>(i));
        at_vertex[static_cast<std::size_t>(edges[i].v)].push_back(static_cast<int>(i));
    }
    for (const auto& incident : at_vertex) {
        for (int a : incident) {
            for (int b : incident) {
                if (a != b) pb.out[static_cast<std::size_t>(a)].push_back(b);
            }
        }
        auto deg = static_cast<std::int64_t>(incident.size());
        pb.link_count += deg * (deg - 1) / 2;
    }
    pb.complete_bound = std::min<std::int64_t>(pb.size, size_upper_bound(pb.link_count, GraphKind::Graph));
    const int first_length = g.distance(edges.front().u, edges.front().v);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (g.distance(edges[i].u, edges[i].v) == first_length) pb.anchor_orbit.push_back(static_cast<int>(i));
    }
    return pb;
}

struct SharedState {
    Clock::time_point deadline;
    std::atomic<bool> stop{false};
    std::atomic<bool> timed_out{false};
    std::atomic<std::uint64_t> nodes{0};
};

class Solver {
public:
    Solver(const Problem& pb, int k, bool complete, SharedState& shared)
        : pb_(pb), k_(k), complete_(complete), shared_(shared),
          color_(static_cast<std::size_t>(pb.size), -1), class_size_(static_cast<std::size_t>(k), 0),
          pair_count_(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0),
          remaining_links_(pb.link_count) {
        if (complete_) missing_ = pb.ordered ? std::int64_t{k} * (k - 1) : std::int64_t{k} * (k - 1) / 2;
        anchor_full_ = static_cast<int>(pb.anchor_orbit.size()) == pb.size;
    }

    ~Solver() { shared_.nodes += local_nodes_; }

    bool assign(int v, int c) {
        auto& slot = color_[static_cast<std::size_t>(v)];
        if (pb_.proper) {
            for (int w : pb_.out[static_cast<std::size_t>(v)]) {
                if (color_[static_cast<std::size_t>(w)] == c) return false;
            }
        }
        slot = c;
        if (pb_.acyclic && closes_cycle(v)) {
            slot = -1;
            return false;
        }
        ++class_size_[static_cast<std::size_t>(c)];
        if (c == used_) ++used_;
        for (int w : pb_.out[static_cast<std::size_t>(v)]) link(c, color_[static_cast<std::size_t>(w)], +1);
        if (pb_.ordered) {
            for (int w : pb_.in[static_cast<std::size_t>(v)]) link(color_[static_cast<std::size_t>(w)], c, +1);
        }
        return true;
    }

    void unassign(int v) {
        const int c = color_[static_cast<std::size_t>(v)];
        color_[static_cast<std::size_t>(v)] = -1;
        for (int w : pb_.out[static_cast<std::size_t>(v)]) link(c, color_[static_cast<std::size_t>(w)], -1);
        if (pb_.ordered) {
            for (int w : pb_.in[static_cast<std::size_t>(v)]) link(color_[static_cast<std::size_t>(w)], c, -1);
        }
        if (--class_size_[static_cast<std::size_t>(c)] == 0 && c == used_ - 1) --used_;
    }

    /// Depth-first extension from element v; leaves the solution in place.
    bool extend(int v) {
        if ((++local_nodes_ & 1023U) == 0 && poll()) return false;
        if (shared_.stop.load(std::memory_order_relaxed)) return false;
        if (v == pb_.size) return accept();
        if (pruned(v)) return false;
        const int top = std::min(used_, k_ - 1);
        for (int c = 0; c <= top; ++c) {
            if (!assign(v, c)) continue;
            if (extend(v + 1)) return true;
            unassign(v);
        }
        return false;
    }

    /// Partial assignments of the first `depth` elements that survive pruning.
    void prefixes(int v, int depth, std::vector<int>& current, std::vector<std::vector<int>>& out) {
        if (v == depth || v == pb_.size) {
            out.push_back(current);
            return;
        }
        if (pruned(v)) return;
        const int top = std::min(used_, k_ - 1);
        for (int c = 0; c <= top; ++c) {
            if (!assign(v, c)) continue;
            current.push_back(c);
            prefixes(v + 1, depth, current, out);
            current.pop_back();
            unassign(v);
        }
    }

    const std::vector<int>& colors() const noexcept { return color_; }

private:
    bool poll() {
        shared_.nodes += local_nodes_ & ~std::uint64_t{1023};
        local_nodes_ &= 1023U;
        if (Clock::now() > shared_.deadline) {
            shared_.timed_out = true;
            shared_.stop = true;
        }
        return shared_.stop.load();
    }

    void link(int from, int to, int delta) {
        if (to < 0 || from < 0) return; // other endpoint uncoloured
        remaining_links_ -= delta;
        if (from == to || !complete_) return;
        if (!pb_.ordered && from > to) std::swap(from, to);
        auto& count = pair_count_[static_cast<std::size_t>(from) * static_cast<std::size_t>(k_) +
                                  static_cast<std::size_t>(to)];
        if (delta > 0 && count++ == 0) --missing_;
        if (delta < 0 && --count == 0) ++missing_;
    }

    bool closes_cycle(int v) {
        const int c = color_[static_cast<std::size_t>(v)];
        stack_.assign(1, v);
        seen_.assign(static_cast<std::size_t>(pb_.size), false);
        while (!stack_.empty()) {
            int x = stack_.back();
            stack_.pop_back();
            for (int w : pb_.out[static_cast<std::size_t>(x)]) {
                if (color_[static_cast<std::size_t>(w)] != c) continue;
                if (w == v) return true;
                if (!seen_[static_cast<std::size_t>(w)]) {
                    seen_[static_cast<std::size_t>(w)] = true;
                    stack_.push_back(w);
                }
            }
        }
        return false;
    }

    bool pruned(int v) const {
        const int remaining = pb_.size - v;
        if (complete_ && used_ + remaining < k_) return true;
        if (complete_ && missing_ > remaining_links_) return true;
        if (v == 0) return false;
        // Element 0 sits in a smallest class among classes meeting the anchor orbit.
        const int anchor = class_size_[0];
        for (int x : pb_.anchor_orbit) {
            int c = color_[static_cast<std::size_t>(x)];
            if (c >= 0 && anchor > class_size_[static_cast<std::size_t>(c)] + remaining) return true;
        }
        return anchor_full_ && complete_ && used_ < k_ && anchor > remaining;
    }

    bool accept() const {
        if (complete_ && (used_ != k_ || missing_ != 0)) return false;
        const int anchor = class_size_[0];
        return std::all_of(pb_.anchor_orbit.begin(), pb_.anchor_orbit.end(), [&](int x) {
            return anchor <= class_size_[static_cast<std::size_t>(color_[static_cast<std::size_t>(x)])];
        });
    }

    const Problem& pb_;
    int k_;
    bool complete_;
    SharedState& shared_;
    std::vector<int> color_;
    std::vector<int> class_size_;
    std::vector<int> pair_count_;
    std::int64_t missing_ = 0;
    std::int64_t remaining_links_;
    int used_ = 0;
    bool anchor_full_ = false;
    std::uint64_t local_nodes_ = 0;
    std::vector<int> stack_;
    std::vector<bool> seen_;
};

/// A colouring with exactly k colours (complete when requested), or nullopt
/// when none exists or time ran out (check shared.timed_out).
std::optional<std::vector<int>> feasible(const Problem& pb, int k, bool complete, SharedState& shared,
                                         unsigned threads) {
    if (threads <= 1 || pb.size < 6) {
        Solver solver(pb, k, complete, shared);
        if (solver.extend(0)) return solver.colors();
        return std::nullopt;
    }

    std::vector<std::vector<int>> work;
    {
        Solver splitter(pb, k, complete, shared);
        std::vector<int> current;
        int depth = 1;
        while (depth < pb.size / 2) {
            work.clear();
            splitter.prefixes(0, depth, current, work);
            if (work.size() >= 4 * static_cast<std::size_t>(threads)) break;
            ++depth;
        }
    }

    std::atomic<std::size_t> next{0};
    std::mutex result_mutex;
    std::optional<std::vector<int>> result;
    auto worker = [&] {
        for (std::size_t i = next++; i < work.size() && !shared.stop; i = next++) {
            Solver solver(pb, k, complete, shared);
            const auto& prefix = work[i];
            bool ok = true;
            for (std::size_t v = 0; v < prefix.size() && ok; ++v) ok = solver.assign(static_cast<int>(v), prefix[v]);
            if (ok && solver.extend(static_cast<int>(prefix.size()))) {
                std::lock_guard lock(result_mutex);
                if (!result) result = solver.colors();
                shared.stop = true;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (result && !shared.timed_out) shared.stop = false;
    return result;
}

/// Merge classes until every pair is linked: the result is complete and
/// keeps the local rule. Used as the best-known witness after a time-out.
std::vector<int> greedy_complete(const Problem& pb) {
    std::vector<std::vector<int>> classes;
    for (int v = 0; v < pb.size; ++v) classes.push_back({v});

    auto linked = [&](const std::vector<int>& from, const std::vector<int>& to) {
        for (int x : from) {
            for (int w : pb.out[static_cast<std::size_t>(x)]) {
                if (std::find(to.begin(), to.end(), w) != to.end()) return true;
            }
        }
        return false;
    };
    auto mergeable = [&](const std::vector<int>& a, const std::vector<int>& b) {
        if (pb.ordered) return !linked(a, b) || !linked(b, a);
        return !linked(a, b);
    };

    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < classes.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < classes.size() && !merged; ++j) {
                if (!mergeable(classes[i], classes[j])) continue;
                classes[i].insert(classes[i].end(), classes[j].begin(), classes[j].end());
                classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(j));
                merged = true;
            }
        }
    }
    std::vector<int> colors(static_cast<std::size_t>(pb.size), 0);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (int v : classes[c]) colors[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    return colors;
}

int count_colors(const std::vector<int>& colors) {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

ExtremalResult maximize(const Problem& pb, const SearchBudget& budget) {
    SharedState shared;
    shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget.time_limit);
    ExtremalResult result;
    for (auto k = static_cast<int>(pb.complete_bound); k >= 1; --k) {
        auto found = feasible(pb, k, true, shared, budget.threads);
        if (shared.timed_out) break;
        if (found) {
            result.value = k;
            result.witness = std::move(*found);
            result.proof_of_optimality = true;
            break;
        }
    }
    result.explored_nodes = shared.nodes;
    if (shared.timed_out) {
        result.status = SearchStatus::TimeLimit;
        result.proof_of_optimality = false;
        result.witness = greedy_complete(pb);
        result.value = count_colors(result.witness);
    } else if (result.value == 0) {
        throw std::logic_error("exhaustive search found no complete colouring");
    }
    return result;
}

ExtremalResult minimize(const Problem& pb, const SearchBudget& budget) {
    SharedState shared;
    shared.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget.time_limit);
    ExtremalResult result;
    for (int k = 1; k <= pb.size; ++k) {
        auto found = feasible(pb, k, false, shared, budget.threads);
        if (shared.timed_out) break;
        if (found) {
            result.value = k;
            result.witness = std::move(*found);
            result.proof_of_optimality = true;
            break;
        }
    }
    result.explored_nodes = shared.nodes;
    if (shared.timed_out) {
        result.status = SearchStatus::TimeLimit;
        result.proof_of_optimality = false;
        result.witness = greedy_complete(pb);
        result.value = count_colors(result.witness);
    }
    return result;
}

void check_vertex_budget(int n, const SearchBudget& budget) {
    if (n > budget.max_vertices) {
        throw Error(ErrorCode::BudgetExceeded, std::to_string(n) + " vertices exceed the search budget of " +
                                                   std::to_string(budget.max_vertices));
    }
}

} // namespace

std::string_view to_string(SearchStatus status) noexcept {
    return status == SearchStatus::Exhausted ? "exhausted" : "time-limit";
}

ExtremalResult exact_achromatic(const CirculantGraph& g, const SearchBudget& budget) {
    check_vertex_budget(g.order(), budget);
    return maximize(vertex_problem(g), budget);
}

ExtremalResult exact_diachromatic(const CirculantDigraph& d, const SearchBudget& budget) {
    check_vertex_budget(d.order(), budget);
    return maximize(digraph_problem(d), budget);
}

ExtremalResult exact_achromatic_index(const CirculantGraph& g, const SearchBudget& budget) {
    if (g.edge_count() > budget.max_edges) {
        throw Error(ErrorCode::BudgetExceeded, std::to_string(g.edge_count()) +
                                                   " edges exceed the search budget of " +
                                                   std::to_string(budget.max_edges));
    }
    return maximize(edge_problem(g), budget);
}

ExtremalResult exact_chromatic_numbers(const CirculantGraph& g, const SearchBudget& budget) {
    check_vertex_budget(g.order(), budget);
    return minimize(vertex_problem(g), budget);
}

ExtremalResult exact_chromatic_numbers(const CirculantDigraph& d, const SearchBudget& budget) {
    check_vertex_budget(d.order(), budget);
    return minimize(digraph_problem(d), budget);
}

EdgeColoring edge_witness(const CirculantGraph& g, const ExtremalResult& result) {
    const auto edges = g.edges();
    if (edges.size() != result.witness.size()) {
        throw Error(ErrorCode::SizeMismatch, "witness does not match the edge set");
    }
    std::map<Edge, int> colors;
    for (std::size_t i = 0; i < edges.size(); ++i) colors[edges[i]] = result.witness[i];
    return EdgeColoring(count_colors(result.witness), std::move(colors));
}

} // namespace chroma
