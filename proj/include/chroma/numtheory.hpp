#pragma once

#include <cstdint>
#include <vector>

namespace chroma {

/// Deterministic trial division. Intended for n up to a few million.
bool is_prime(std::int64_t n) noexcept;

/// Quadratic residue structure of Z_p for an odd prime p.
///
/// `length_reps` are the residues usable as undirected chord lengths: for
/// p = 1 (mod 4) the residues r <= (p-1)/2 (one per {r, p-r} pair, since -1
/// is a square), for p = 3 (mod 4) the full residue set.
struct ResidueClassification {
    int modulus = 0;
    std::vector<int> qr;
    std::vector<int> nqr;
    std::vector<int> length_reps;
    int residue_class = 0; // p mod 4

    bool is_residue(int x) const;
};

/// Throws Error{NotOddPrime} unless p is an odd prime.
ResidueClassification classify_residues(int p);

} // namespace chroma
