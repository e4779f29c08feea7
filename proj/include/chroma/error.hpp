#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chroma {

enum class ErrorCode {
    NotOddPrime,
    LengthOutOfRange,
    EmptyLengthSet,
    SizeMismatch,
    KeySetMismatch,
    PreconditionFailed,
    ConstructionNotVerified,
    NotDifferenceSet,
    BadCardinality,
    NotFound,
    NotDecomposable,
    BudgetExceeded,
    TimeLimit,
    BadCertificate,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every exception thrown by the library. `code()` identifies the
/// failure; derived types carry the data a caller needs to diagnose it.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace chroma
