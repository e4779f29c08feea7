#include "chroma/planes.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chroma/constructions.hpp"

namespace chroma {

namespace {

/// q with q^2 + q + 1 = n, if any.
std::optional<int> plane_order(int n) {
    for (int q = 1; q * q + q + 1 <= n; ++q) {
        if (q * q + q + 1 == n) return q;
    }
    return std::nullopt;
}

std::vector<int> sorted_residues(std::vector<int> xs, int n) {
    for (int& x : xs) x = mod(x, n);
    std::sort(xs.begin(), xs.end());
    return xs;
}

std::vector<int> lex_least_shift(const std::vector<int>& d, int n) {
    std::vector<int> best;
    for (int anchor : d) {
        std::vector<int> s;
        s.reserve(d.size());
        for (int x : d) s.push_back(x - anchor);
        s = sorted_residues(std::move(s), n);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

/// Shifts of d whose smallest element is 1, the form the reference table uses.
std::vector<int> least_shift_with_min_one(const std::vector<int>& d, int n) {
    std::vector<int> best;
    for (int anchor : d) {
        std::vector<int> s;
        for (int x : d) s.push_back(x - anchor + 1);
        s = sorted_residues(std::move(s), n);
        if (s.front() != 1) continue;
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

std::vector<int> units_of(int n) {
    std::vector<int> units;
    for (int u = 1; u < n; ++u) {
        if (std::gcd(u, n) == 1) units.push_back(u);
    }
    return units;
}

/// Exhaustive search with {0, 1} fixed: the pair realising difference 1 can
/// always be shifted there.
class DifferenceSetSearch {
public:
    DifferenceSetSearch(int q) : n_(q * q + q + 1), size_(q + 1), used_(static_cast<std::size_t>(n_), false) {}

    std::optional<std::vector<int>> run() {
        chosen_ = {0, 1};
        used_[1] = used_[static_cast<std::size_t>(n_ - 1)] = true;
        if (extend(2)) return chosen_;
        return std::nullopt;
    }

private:
    bool extend(int from) {
        if (static_cast<int>(chosen_.size()) == size_) return true;
        const int needed = size_ - static_cast<int>(chosen_.size());
        for (int e = from; e <= n_ - needed; ++e) {
            std::vector<int> fresh;
            bool ok = true;
            for (int d : chosen_) {
                int plus = mod(e - d, n_);
                int minus = n_ - plus;
                if (used_[static_cast<std::size_t>(plus)] || used_[static_cast<std::size_t>(minus)]) {
                    ok = false;
                    break;
                }
                used_[static_cast<std::size_t>(plus)] = used_[static_cast<std::size_t>(minus)] = true;
                fresh.push_back(plus);
            }
            if (ok) {
                chosen_.push_back(e);
                if (extend(e + 1)) return true;
                chosen_.pop_back();
            }
            for (int g : fresh) used_[static_cast<std::size_t>(g)] = used_[static_cast<std::size_t>(n_ - g)] = false;
        }
        return false;
    }

    int n_;
    int size_;
    std::vector<bool> used_;
    std::vector<int> chosen_;
};

DifferenceSet canonicalize(const DifferenceSet& found) {
    const int n = found.modulus();
    auto refs = reference_difference_sets();
    if (auto it = refs.find(n); it != refs.end()) {
        try {
            auto reference = validate_difference_set(it->second, n);
            if (affinely_equivalent(found, reference)) return reference;
        } catch (const Error&) {
            // An invalid reference entry cannot be the canonical form.
        }
    }
    std::vector<int> best;
    for (int u : units_of(n)) {
        auto candidate = least_shift_with_min_one(found.scaled(u).elements(), n);
        if (!candidate.empty() && (best.empty() || candidate < best)) best = std::move(candidate);
    }
    return validate_difference_set(best, n);
}

} // namespace

bool DifferenceSet::contains(int x) const {
    return std::binary_search(elements_.begin(), elements_.end(), mod(x, n_));
}

std::pair<int, int> DifferenceSet::difference_pair(int g) const {
    g = mod(g, n_);
    if (g == 0) throw Error(ErrorCode::PreconditionFailed, "difference must be nonzero");
    return pair_of_[static_cast<std::size_t>(g)];
}

DifferenceSet DifferenceSet::shifted(int i) const {
    std::vector<int> out;
    for (int x : elements_) out.push_back(mod(std::int64_t{x} + i, n_));
    return validate_difference_set(std::move(out), n_);
}

DifferenceSet DifferenceSet::scaled(int unit) const {
    std::vector<int> out;
    for (int x : elements_) out.push_back(mod(std::int64_t{x} * unit, n_));
    return validate_difference_set(std::move(out), n_);
}

DifferenceSet validate_difference_set(std::vector<int> elements, int n) {
    auto q = plane_order(n);
    if (!q || *q < 2) {
        throw Error(ErrorCode::BadCardinality, std::to_string(n) + " is not q^2+q+1 for an integer q >= 2");
    }
    if (std::any_of(elements.begin(), elements.end(), [n](int x) { return x < 0 || x >= n; })) {
        throw Error(ErrorCode::BadCardinality, "elements must lie in 0.." + std::to_string(n - 1));
    }
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
        throw Error(ErrorCode::BadCardinality, "elements must be distinct");
    }
    if (static_cast<int>(elements.size()) != *q + 1) {
        throw Error(ErrorCode::BadCardinality, "a difference set mod " + std::to_string(n) + " has " +
                                                   std::to_string(*q + 1) + " elements, got " +
                                                   std::to_string(elements.size()));
    }

    std::vector<int> count(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> pair_of(static_cast<std::size_t>(n), {0, 0});
    for (int x : elements) {
        for (int y : elements) {
            if (x == y) continue;
            auto g = static_cast<std::size_t>(mod(x - y, n));
            ++count[g];
            pair_of[g] = {x, y};
        }
    }
    for (int g = 1; g < n; ++g) {
        if (count[static_cast<std::size_t>(g)] != 1) throw NotDifferenceSet(g, count[static_cast<std::size_t>(g)]);
    }
    return DifferenceSet(n, *q, std::move(elements), std::move(pair_of));
}

std::map<int, std::vector<int>> embedded_difference_sets() {
    return {
        {13, {1, 2, 5, 7}},
        {31, {1, 2, 4, 9, 13, 19}},
        {57, {1, 2, 4, 14, 33, 37, 44, 53}},
        {91, {1, 2, 4, 10, 28, 50, 57, 62, 78, 82}},
        {133, {1, 2, 4, 13, 21, 35, 39, 82, 89, 95, 105, 110}},
        {183, {1, 2, 4, 17, 24, 29, 43, 77, 83, 87, 120, 138, 155, 176}},
    };
}

std::map<int, std::vector<int>> parse_difference_set_table(const std::string& text) {
    std::map<int, std::vector<int>> table;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw Error(ErrorCode::PreconditionFailed,
                        "difference-set table line " + std::to_string(line_no) + ": expected `n: d0,d1,...`");
        }
        try {
            int n = std::stoi(line.substr(0, colon));
            std::vector<int> elements;
            std::istringstream items(line.substr(colon + 1));
            std::string item;
            while (std::getline(items, item, ',')) {
                if (item.find_first_not_of(" \t\r") != std::string::npos) elements.push_back(std::stoi(item));
            }
            table[n] = std::move(elements);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::PreconditionFailed,
                        "difference-set table line " + std::to_string(line_no) + ": bad integer");
        }
    }
    return table;
}

std::map<int, std::vector<int>> reference_difference_sets() {
    const char* path = std::getenv("CHROMA_TABLE_PATH");
    if (path == nullptr || *path == '\0') return embedded_difference_sets();
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::PreconditionFailed, std::string("cannot read CHROMA_TABLE_PATH file ") + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_difference_set_table(buffer.str());
}

bool shift_equivalent(const DifferenceSet& a, const DifferenceSet& b) {
    return a.modulus() == b.modulus() &&
           lex_least_shift(a.elements(), a.modulus()) == lex_least_shift(b.elements(), b.modulus());
}

bool affinely_equivalent(const DifferenceSet& a, const DifferenceSet& b) {
    if (a.modulus() != b.modulus()) return false;
    const auto target = lex_least_shift(b.elements(), b.modulus());
    for (int u : units_of(a.modulus())) {
        if (lex_least_shift(a.scaled(u).elements(), a.modulus()) == target) return true;
    }
    return false;
}

DifferenceSet search_difference_set(int q, DifferenceSetSource source) {
    if (q < 2) throw Error(ErrorCode::PreconditionFailed, "plane order must be at least 2");
    const int n = q * q + q + 1;

    if (source != DifferenceSetSource::Search) {
        auto refs = reference_difference_sets();
        if (auto it = refs.find(n); it != refs.end()) return validate_difference_set(it->second, n);
        if (source == DifferenceSetSource::Table) {
            throw Error(ErrorCode::NotFound, "no reference difference set for n = " + std::to_string(n));
        }
    }
    if (q > max_search_order) {
        throw Error(ErrorCode::BudgetExceeded, "exhaustive search is limited to orders <= " +
                                                   std::to_string(max_search_order));
    }
    auto found = DifferenceSetSearch(q).run();
    if (!found) throw Error(ErrorCode::NotFound, "no planar difference set of order " + std::to_string(q));
    return canonicalize(validate_difference_set(*found, n));
}

std::vector<int> CyclicPlane::line(int i) const {
    std::vector<int> out;
    for (int x : d_.elements()) out.push_back(x + i);
    return sorted_residues(std::move(out), size());
}

bool CyclicPlane::incident(int point, int line_index) const { return d_.contains(point - line_index); }

int CyclicPlane::join(int p1, int p2) const {
    auto [x, y] = d_.difference_pair(p2 - p1);
    return mod(p1 - y, size());
}

int CyclicPlane::meet(int l1, int l2) const {
    auto [x, y] = d_.difference_pair(l2 - l1);
    return mod(x + l1, size());
}

ChordTable chord_table(const DifferenceSet& d) {
    const int n = d.modulus();
    ChordTable table;
    table.modulus = n;
    table.by_length.assign(static_cast<std::size_t>(n / 2), Edge{-1, -1});
    const auto& e = d.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            int diff = mod(e[j] - e[i], n);
            int length = std::min(diff, n - diff);
            auto& slot = table.by_length[static_cast<std::size_t>(length - 1)];
            if (slot.u != -1) throw std::logic_error("difference set produced two chords of one length");
            slot = Edge{e[i], e[j]};
        }
    }
    return table;
}

std::optional<int> MatchingDecomposition::matching_of(Edge chord) const {
    for (std::size_t m = 0; m < matchings.size(); ++m) {
        if (std::find(matchings[m].begin(), matchings[m].end(), chord) != matchings[m].end()) {
            return static_cast<int>(m);
        }
    }
    return std::nullopt;
}

MatchingDecomposition matching_decomposition(const DifferenceSet& d, std::vector<int> lengths) {
    const int q = d.order();
    const int n = d.modulus();
    if (q % 2 == 0) throw Error(ErrorCode::PreconditionFailed, "perfect matchings on q+1 points need odd q");
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    if (lengths.empty()) throw Error(ErrorCode::EmptyLengthSet, "length set is empty");
    if (lengths.front() < 1 || lengths.back() > n / 2) {
        throw Error(ErrorCode::LengthOutOfRange, "lengths must lie in 1.." + std::to_string(n / 2));
    }
    const int half = (q + 1) / 2;
    if (static_cast<int>(lengths.size()) % half != 0) {
        throw Error(ErrorCode::PreconditionFailed,
                    "|J| = " + std::to_string(lengths.size()) + " is not divisible by " + std::to_string(half));
    }
    const int t = static_cast<int>(lengths.size()) / half;

    auto table = chord_table(d);
    std::vector<Edge> chords;
    for (int l : lengths) chords.push_back(table.chord(l));
    std::sort(chords.begin(), chords.end());

    std::map<int, int> degree;
    for (Edge c : chords) {
        ++degree[c.u];
        ++degree[c.v];
    }
    for (int x : d.elements()) {
        if (degree[x] != t) {
            throw Error(ErrorCode::NotDecomposable, "point " + std::to_string(x) + " meets " +
                                                        std::to_string(degree[x]) + " chords, expected " +
                                                        std::to_string(t));
        }
    }

    std::vector<std::vector<Edge>> matchings(static_cast<std::size_t>(t));
    std::vector<std::map<int, bool>> covered(static_cast<std::size_t>(t));
    auto place = [&](auto&& self, std::size_t i) -> bool {
        if (i == chords.size()) return true;
        Edge c = chords[i];
        for (std::size_t m = 0; m < matchings.size(); ++m) {
            if (covered[m][c.u] || covered[m][c.v]) continue;
            covered[m][c.u] = covered[m][c.v] = true;
            matchings[m].push_back(c);
            if (self(self, i + 1)) return true;
            matchings[m].pop_back();
            covered[m][c.u] = covered[m][c.v] = false;
        }
        return false;
    };
    if (!place(place, 0)) throw Error(ErrorCode::NotDecomposable, "chord subgraph has no 1-factorization");

    MatchingDecomposition out;
    out.lengths = std::move(lengths);
    out.t = t;
    out.owner_union = chords;
    out.matchings = std::move(matchings);
    return out;
}

PlaneEdgeColoring plane_edge_coloring(const DifferenceSet& d, std::vector<int> lengths) {
    auto decomposition = matching_decomposition(d, std::move(lengths));
    const int n = d.modulus();
    const int t = decomposition.t;
    CirculantGraph graph(n, decomposition.lengths);

    std::map<Edge, int> matching_index;
    for (std::size_t m = 0; m < decomposition.matchings.size(); ++m) {
        for (Edge c : decomposition.matchings[m]) matching_index[c] = static_cast<int>(m);
    }

    std::map<Edge, int> colors;
    for (Edge e : graph.edges()) {
        auto [x, y] = d.difference_pair(e.v - e.u);
        int line = mod(e.u - y, n);
        colors[e] = line * t + matching_index.at(Edge::canonical(x, y));
    }
    EdgeColoring coloring(t * n, std::move(colors));
    auto report = verify_edge_coloring(graph, coloring);
    PlaneEdgeColoring out{std::move(decomposition), std::move(graph), std::move(coloring), std::move(report)};
    if (!out.report.verified()) throw ConstructionNotVerified<PlaneEdgeColoring>(std::move(out));
    return out;
}

} // namespace chroma
