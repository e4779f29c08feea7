#include "chroma/circulant.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "chroma/error.hpp"

namespace chroma {

namespace {

std::vector<int> normalize_lengths(std::vector<int> lengths, int max_length) {
    if (lengths.empty()) throw Error(ErrorCode::EmptyLengthSet, "length set is empty");
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    if (lengths.front() < 1 || lengths.back() > max_length) {
        throw Error(ErrorCode::LengthOutOfRange,
                    "lengths must lie in 1.." + std::to_string(max_length));
    }
    return lengths;
}

std::vector<bool> mask_of(const std::vector<int>& lengths, int n) {
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    for (int l : lengths) mask[static_cast<std::size_t>(l)] = true;
    return mask;
}

} // namespace

CirculantGraph::CirculantGraph(int n, std::vector<int> lengths) : n_(n) {
    if (n < 3) throw Error(ErrorCode::PreconditionFailed, "circulant graph needs n >= 3");
    lengths_ = normalize_lengths(std::move(lengths), n / 2);
    length_mask_ = mask_of(lengths_, n);
}

int CirculantGraph::distance(int u, int v) const noexcept {
    int d = mod(std::int64_t{v} - u, n_);
    return std::min(d, n_ - d);
}

bool CirculantGraph::has_length(int length) const noexcept {
    return length > 0 && length < n_ && length_mask_[static_cast<std::size_t>(length)];
}

bool CirculantGraph::adjacent(int u, int v) const noexcept { return has_length(distance(u, v)); }

int CirculantGraph::degree() const noexcept {
    auto d = 2 * static_cast<int>(lengths_.size());
    if (n_ % 2 == 0 && has_length(n_ / 2)) --d;
    return d;
}

std::int64_t CirculantGraph::edge_count() const noexcept { return std::int64_t{n_} * degree() / 2; }

std::vector<int> CirculantGraph::neighbors(int u) const {
    std::vector<int> out;
    out.reserve(lengths_.size() * 2);
    for (int l : lengths_) {
        int fwd = mod(std::int64_t{u} + l, n_);
        int back = mod(std::int64_t{u} - l, n_);
        out.push_back(fwd);
        if (back != fwd) out.push_back(back);
    }
    return out;
}

std::vector<Edge> CirculantGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    std::vector<std::tuple<int, int>> local;
    for (int u = 0; u < n_; ++u) {
        local.clear();
        for (int v : neighbors(u)) {
            if (v > u) local.emplace_back(distance(u, v), v);
        }
        std::sort(local.begin(), local.end());
        for (auto [l, v] : local) out.push_back({u, v});
    }
    return out;
}

CirculantDigraph::CirculantDigraph(int n, std::vector<int> lengths) : n_(n) {
    if (n < 2) throw Error(ErrorCode::PreconditionFailed, "circulant digraph needs n >= 2");
    lengths_ = normalize_lengths(std::move(lengths), n - 1);
    length_mask_ = mask_of(lengths_, n);
}

bool CirculantDigraph::has_arc(int tail, int head) const noexcept {
    int d = mod(std::int64_t{head} - tail, n_);
    return d != 0 && length_mask_[static_cast<std::size_t>(d)];
}

std::vector<int> CirculantDigraph::out_neighbors(int u) const {
    std::vector<int> out;
    out.reserve(lengths_.size());
    for (int l : lengths_) out.push_back(mod(std::int64_t{u} + l, n_));
    return out;
}

std::vector<int> CirculantDigraph::in_neighbors(int u) const {
    std::vector<int> out;
    out.reserve(lengths_.size());
    for (int l : lengths_) out.push_back(mod(std::int64_t{u} - l, n_));
    return out;
}

std::vector<Arc> CirculantDigraph::arcs() const {
    std::vector<Arc> out;
    out.reserve(static_cast<std::size_t>(arc_count()));
    for (int u = 0; u < n_; ++u) {
        for (int l : lengths_) out.push_back({u, mod(std::int64_t{u} + l, n_)});
    }
    return out;
}

} // namespace chroma
