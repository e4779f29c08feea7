#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "chroma/bounds.hpp"
#include "chroma/constructions.hpp"
#include "chroma/planes.hpp"
#include "chroma/search.hpp"

namespace chroma {

using Json = nlohmann::ordered_json;

inline constexpr int certificate_schema_version = 1;
std::string_view tool_version() noexcept;

/// "u-v" with u < v.
std::string edge_key(Edge e);
Edge parse_edge_key(std::string_view key);

Json report_flags(const VerificationReport& report);
Json report_violations(const VerificationReport& report);

Json certificate(const GraphConstruction& c);
Json certificate(const DigraphConstruction& c);
Json certificate(const PlaneEdgeColoring& c, const DifferenceSet& d);

enum class Quantity { Achromatic, Diachromatic, AchromaticIndex, Chromatic, Dichromatic };
std::string_view to_string(Quantity q) noexcept;
Quantity parse_quantity(std::string_view name);

/// Exact-search certificate; the witness is re-verified while building it.
Json search_certificate(Quantity quantity, int n, const std::vector<int>& lengths, const ExtremalResult& result);

Json size_bound_certificate(std::int64_t m, GraphKind kind);
Json profile_certificate(const CirculantGraph& g, Quantity target);
Json digraph_bound_certificate(const CirculantDigraph& d);
Json cycle_certificate(std::int64_t n);

Json difference_set_certificate(const DifferenceSet& d, bool with_chords);
Json difference_set_failure_certificate(int n, const std::vector<int>& elements, const NotDifferenceSet& failure);

/// Recomputes the `verified` and `violations` blocks from a certificate's
/// instance, parameters and assignment. Throws Error{BadCertificate} when the
/// document is malformed.
struct Reverification {
    Json verified;
    Json violations;
    bool matches_stored = false;
    bool all_verified = false;
};
Reverification reverify(const Json& cert);

/// Deterministic serialization: two-space indent, trailing newline.
std::string dump(const Json& cert);

} // namespace chroma
