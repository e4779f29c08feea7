#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chroma/circulant.hpp"
#include "chroma/coloring.hpp"
#include "chroma/error.hpp"

namespace chroma {

/// Planar difference set: q+1 residues of Z_n, n = q^2+q+1, whose nonzero
/// differences each occur exactly once. Construct via validate_difference_set.
class DifferenceSet {
public:
    int modulus() const noexcept { return n_; }
    int order() const noexcept { return q_; }
    const std::vector<int>& elements() const noexcept { return elements_; }

    bool contains(int x) const;
    /// The unique (minuend, subtrahend) pair with minuend - subtrahend = g (mod n).
    std::pair<int, int> difference_pair(int g) const;

    DifferenceSet shifted(int i) const;
    DifferenceSet scaled(int unit) const;
    DifferenceSet negated() const { return scaled(-1); }

private:
    friend DifferenceSet validate_difference_set(std::vector<int>, int);
    DifferenceSet(int n, int q, std::vector<int> elements, std::vector<std::pair<int, int>> pairs)
        : n_(n), q_(q), elements_(std::move(elements)), pair_of_(std::move(pairs)) {}

    int n_;
    int q_;
    std::vector<int> elements_;
    std::vector<std::pair<int, int>> pair_of_; // indexed by difference
};

class NotDifferenceSet : public Error {
public:
    NotDifferenceSet(int difference, int representations)
        : Error(ErrorCode::NotDifferenceSet,
                "difference " + std::to_string(difference) + " has " + std::to_string(representations) +
                    " representations"),
          difference_(difference), representations_(representations) {}

    int difference() const noexcept { return difference_; }
    int representations() const noexcept { return representations_; }

private:
    int difference_;
    int representations_;
};

/// Throws BadCardinality unless n = q^2+q+1 with q >= 2 and |elements| = q+1
/// distinct residues; throws NotDifferenceSet for the first difference g with
/// zero or several representations.
DifferenceSet validate_difference_set(std::vector<int> elements, int n);

/// Reference difference sets keyed by modulus: the six embedded sets for
/// n in {13, 31, 57, 91, 133, 183}, or the contents of the file named by
/// CHROMA_TABLE_PATH (lines `n: d0,d1,...`) when that variable is set.
std::map<int, std::vector<int>> reference_difference_sets();
std::map<int, std::vector<int>> embedded_difference_sets();
std::map<int, std::vector<int>> parse_difference_set_table(const std::string& text);

enum class DifferenceSetSource {
    Auto,   // reference table when it has the modulus, exhaustive search otherwise
    Table,  // reference table only
    Search, // exhaustive search only
};

/// Largest order the exhaustive search accepts.
inline constexpr int max_search_order = 9;

/// Finds a planar difference set of order q. Search results are canonicalized
/// over the orbit x -> u*x + i (u a unit): the reference set when it lies in
/// the orbit, else the lexicographically least member with minimum 1.
/// Throws NotFound when no set exists (q = 6) or the table lacks the modulus,
/// and BudgetExceeded for orders above max_search_order.
DifferenceSet search_difference_set(int q, DifferenceSetSource source = DifferenceSetSource::Auto);

/// True when b = u*a + i for some unit u and shift i.
bool affinely_equivalent(const DifferenceSet& a, const DifferenceSet& b);
bool shift_equivalent(const DifferenceSet& a, const DifferenceSet& b);

/// Cyclic projective plane: points Z_n, lines l_i = D + i.
class CyclicPlane {
public:
    explicit CyclicPlane(DifferenceSet d) : d_(std::move(d)) {}

    int size() const noexcept { return d_.modulus(); }
    const DifferenceSet& difference_set() const noexcept { return d_; }

    std::vector<int> line(int i) const;
    bool incident(int point, int line) const;
    /// Index of the unique line through two distinct points.
    int join(int p1, int p2) const;
    /// The unique common point of two distinct lines.
    int meet(int l1, int l2) const;

private:
    DifferenceSet d_;
};

/// The chords of the polygon spanned by D: one per unordered pair, all of
/// distinct lengths covering 1..floor(n/2).
struct ChordTable {
    int modulus = 0;
    std::vector<Edge> by_length; // index = length - 1

    Edge chord(int length) const { return by_length.at(static_cast<std::size_t>(length - 1)); }
};

ChordTable chord_table(const DifferenceSet& d);

/// Chords with lengths in J split into t = 2|J|/(q+1) perfect matchings on D.
struct MatchingDecomposition {
    std::vector<int> lengths;
    int t = 0;
    std::vector<std::vector<Edge>> matchings;
    std::vector<Edge> owner_union;

    /// Matching index (0-based) of a chord of D, if the chord belongs to the union.
    std::optional<int> matching_of(Edge chord) const;
};

/// Backtracking 1-factorization of the chord subgraph. Throws
/// PreconditionFailed (q even, |J| not divisible by (q+1)/2),
/// LengthOutOfRange, or NotDecomposable.
MatchingDecomposition matching_decomposition(const DifferenceSet& d, std::vector<int> lengths);

struct PlaneEdgeColoring {
    MatchingDecomposition decomposition;
    CirculantGraph graph;
    EdgeColoring coloring;
    VerificationReport report;
};

/// Edge {u,v} lies in exactly one line l_i; it gets colour i*t + m where its
/// chord {u-i, v-i} of D belongs to matching m. Uses exactly t*n colours.
/// Throws ConstructionNotVerified if the result fails verification.
PlaneEdgeColoring plane_edge_coloring(const DifferenceSet& d, std::vector<int> lengths);

} // namespace chroma
