#include "chroma/numtheory.hpp"

#include <algorithm>

#include "chroma/error.hpp"

namespace chroma {

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

bool ResidueClassification::is_residue(int x) const {
    x %= modulus;
    if (x < 0) x += modulus;
    return std::binary_search(qr.begin(), qr.end(), x);
}

ResidueClassification classify_residues(int p) {
    if (p < 3 || !is_prime(p)) {
        throw Error(ErrorCode::NotOddPrime, "modulus " + std::to_string(p) + " is not an odd prime");
    }

    std::vector<bool> square(static_cast<std::size_t>(p), false);
    for (std::int64_t x = 1; x < p; ++x) square[static_cast<std::size_t>(x * x % p)] = true;

    ResidueClassification rc;
    rc.modulus = p;
    rc.residue_class = p % 4;
    for (int x = 1; x < p; ++x) (square[static_cast<std::size_t>(x)] ? rc.qr : rc.nqr).push_back(x);

    if (rc.residue_class == 1) {
        std::copy_if(rc.qr.begin(), rc.qr.end(), std::back_inserter(rc.length_reps),
                     [p](int r) { return r <= (p - 1) / 2; });
    } else {
        rc.length_reps = rc.qr;
    }
    return rc;
}

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotOddPrime: return "NotOddPrime";
    case ErrorCode::LengthOutOfRange: return "LengthOutOfRange";
    case ErrorCode::EmptyLengthSet: return "EmptyLengthSet";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::KeySetMismatch: return "KeySetMismatch";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ConstructionNotVerified: return "ConstructionNotVerified";
    case ErrorCode::NotDifferenceSet: return "NotDifferenceSet";
    case ErrorCode::BadCardinality: return "BadCardinality";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NotDecomposable: return "NotDecomposable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::TimeLimit: return "TimeLimit";
    case ErrorCode::BadCertificate: return "BadCertificate";
    }
    return "Unknown";
}

} // namespace chroma
