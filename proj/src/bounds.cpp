#include "chroma/bounds.hpp"

#include <cmath>
#include <string>

#include "chroma/error.hpp"

namespace chroma {

std::int64_t isqrt(std::int64_t x) {
    if (x < 0) throw Error(ErrorCode::PreconditionFailed, "isqrt of a negative number");
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
    // compare by division so (s+1)^2 never overflows near INT64_MAX
    while (s > 0 && s > x / s) --s;
    while (s + 1 <= x / (s + 1)) ++s;
    return s;
}

std::int64_t size_upper_bound(std::int64_t m, GraphKind kind) {
    if (m < 0) throw Error(ErrorCode::PreconditionFailed, "size must be non-negative");
    // (1 + sqrt(1 + 8m)) / 2 resp. (1 + sqrt(1 + 4m)) / 2; flooring the root first is exact.
    const std::int64_t disc = kind == GraphKind::Graph ? 1 + 8 * m : 1 + 4 * m;
    return (1 + isqrt(disc)) / 2;
}

std::int64_t fg_f_floor(std::int64_t n, std::int64_t r, std::int64_t x) { return (n * r) / (2 * x); }

std::int64_t fg_g(std::int64_t n, std::int64_t r, std::int64_t x) {
    if (r < n - 2 * x) return 2 * x * (r - 1) + 1;
    return x * (n - 2 * x + r - 1) + 1;
}

BoundProfile fg_upper_bound(std::int64_t n, std::int64_t r) {
    if (n < 3 || r < 1 || r > n - 1) {
        throw Error(ErrorCode::PreconditionFailed,
                    "fg bound needs n >= 3 and 1 <= r <= n-1 (got n=" + std::to_string(n) +
                        ", r=" + std::to_string(r) + ")");
    }
    BoundProfile profile;
    profile.n = n;
    profile.r = r;
    profile.m = n * r / 2;
    profile.eq2_bound = size_upper_bound(profile.m, GraphKind::Graph);
    profile.eq3_bound = size_upper_bound(profile.m, GraphKind::Digraph);
    profile.index_eq2_bound = size_upper_bound(n * r * (r - 1) / 2, GraphKind::Graph);

    const std::int64_t last = n * r / 2;
    profile.fg_table.reserve(static_cast<std::size_t>(last));
    for (std::int64_t x = 1; x <= last; ++x) {
        FgRow row{x, fg_f_floor(n, r, x), fg_g(n, r, x), 0};
        row.min = std::min(row.f_floor, row.g);
        if (x == 1 || row.min > profile.fg_bound) {
            profile.fg_bound = row.min;
            profile.fg_argmax_x = x;
        }
        profile.fg_table.push_back(row);
    }
    return profile;
}

std::int64_t cycle_achromatic(std::int64_t n) {
    if (n < 3) throw Error(ErrorCode::PreconditionFailed, "cycle length must be at least 3");
    std::int64_t k = 1;
    while ((k + 1) * ((k + 1) / 2) <= n) ++k;
    std::int64_t s = 0;
    for (std::int64_t x = 1; 2 * x * x + x + 1 <= n; ++x) {
        if (2 * x * x + x + 1 == n) ++s;
    }
    return k - s;
}

} // namespace chroma
