#include "chroma/certificate.hpp"

#include <charconv>

#include "chroma/error.hpp"

#ifndef CHROMA_VERSION
#define CHROMA_VERSION "0.0.0"
#endif

namespace chroma {

namespace {

Json skeleton(std::string_view kind, int n, const std::vector<int>& lengths, bool directed) {
    Json cert;
    cert["schema_version"] = certificate_schema_version;
    cert["kind"] = kind;
    cert["instance"] = Json{{"n", n}, {"J", lengths}, {"directed", directed}};
    cert["parameters"] = Json::object();
    cert["k"] = nullptr;
    cert["assignment"] = Json::array();
    cert["verified"] = Json::object();
    cert["violations"] = Json::object();
    cert["provenance"] = Json::object();
    cert["tool_version"] = tool_version();
    return cert;
}

std::vector<int> lengths_of(std::span<const int> lengths) { return {lengths.begin(), lengths.end()}; }

Json provenance(std::string_view construction, std::string_view statement) {
    return Json{{"construction", construction}, {"statement", statement}};
}

/// Object keys in canonical edge order rather than std::map order.
Json edge_assignment(const CirculantGraph& g, const EdgeColoring& c) {
    Json out = Json::object();
    for (Edge e : g.edges()) out[edge_key(e)] = c.at(e);
    return out;
}

EdgeColoring parse_edge_assignment(const Json& assignment, int k) {
    std::map<Edge, int> colors;
    for (const auto& [key, value] : assignment.items()) colors[parse_edge_key(key)] = value.get<int>();
    return EdgeColoring(k, std::move(colors));
}

Json bound_flags(bool recomputed) { return Json{{"recomputed", recomputed}}; }

std::int64_t profile_target_bound(const BoundProfile& p, Quantity target) {
    if (target == Quantity::AchromaticIndex) return std::min(p.fg_bound, p.index_eq2_bound);
    return p.eq2_bound;
}

Json profile_parameters(const BoundProfile& p, Quantity target) {
    Json table = Json::array();
    for (const auto& row : p.fg_table) table.push_back({row.x, row.f_floor, row.g, row.min});
    return Json{{"mode", "profile"},
                {"target", to_string(target)},
                {"r", p.r},
                {"m", p.m},
                {"eq2_bound", p.eq2_bound},
                {"eq3_bound", p.eq3_bound},
                {"index_eq2_bound", p.index_eq2_bound},
                {"fg_bound", p.fg_bound},
                {"fg_argmax_x", p.fg_argmax_x},
                {"fg_table", std::move(table)}};
}

/// Recomputes bound parameters; returns the expected k.
Json recompute_bound(const Json& cert) {
    const auto& params = cert.at("parameters");
    const auto mode = params.at("mode").get<std::string>();
    const auto& instance = cert.at("instance");
    if (mode == "size") {
        auto kind = instance.at("directed").get<bool>() ? GraphKind::Digraph : GraphKind::Graph;
        return size_bound_certificate(params.at("m").get<std::int64_t>(), kind);
    }
    if (mode == "cycle") return cycle_certificate(instance.at("n").get<std::int64_t>());
    if (mode == "profile") {
        CirculantGraph g(instance.at("n").get<int>(), instance.at("J").get<std::vector<int>>());
        return profile_certificate(g, parse_quantity(params.at("target").get<std::string>()));
    }
    throw Error(ErrorCode::BadCertificate, "unknown bound mode `" + mode + "`");
}

} // namespace

std::string_view tool_version() noexcept { return CHROMA_VERSION; }

std::string edge_key(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Edge parse_edge_key(std::string_view key) {
    auto dash = key.find('-');
    Edge e{-1, -1};
    if (dash != std::string_view::npos) {
        auto [p1, ec1] = std::from_chars(key.data(), key.data() + dash, e.u);
        auto [p2, ec2] = std::from_chars(key.data() + dash + 1, key.data() + key.size(), e.v);
        if (ec1 == std::errc{} && ec2 == std::errc{} && p1 == key.data() + dash &&
            p2 == key.data() + key.size() && e.u >= 0 && e.u < e.v) {
            return e;
        }
    }
    throw Error(ErrorCode::BadCertificate, "bad edge key `" + std::string(key) + "`");
}

Json report_flags(const VerificationReport& report) {
    Json flags{{"proper", report.proper}, {"complete", report.complete}};
    flags["acyclic"] = report.acyclic ? Json(*report.acyclic) : Json(nullptr);
    return flags;
}

Json report_violations(const VerificationReport& report) {
    Json proper = Json::array();
    for (const auto& c : report.proper_violations) {
        Json item = Json::array({edge_key(c.first)});
        if (c.second) item.push_back(edge_key(*c.second));
        proper.push_back(std::move(item));
    }
    Json missing = Json::array();
    for (auto [i, j] : report.missing_pairs) missing.push_back({i, j});
    return Json{{"proper", std::move(proper)},
                {"missing_pairs", std::move(missing)},
                {"monochromatic_cycle", report.monochromatic_cycle}};
}

Json certificate(const GraphConstruction& c) {
    auto cert = skeleton("vertex-coloring", c.graph.order(), lengths_of(c.graph.lengths()), false);
    cert["parameters"] = Json{{"q", (c.plan.p - 1) / 4},
                              {"a", c.plan.a},
                              {"p", c.plan.p},
                              {"steps", c.plan.steps},
                              {"starts", c.plan.starts},
                              {"segment_length", c.plan.segment_length}};
    cert["k"] = c.coloring.k();
    cert["assignment"] = c.coloring.colors();
    cert["verified"] = report_flags(c.report);
    cert["violations"] = report_violations(c.report);
    cert["provenance"] = provenance("residue-walk-graph",
                                    "alpha(C_{4q^2+aq+1}(1,a)) >= 4q+1 for prime 4q+1 and non-residue a");
    return cert;
}

Json certificate(const DigraphConstruction& c) {
    auto cert = skeleton("digraph-coloring", c.digraph.order(), lengths_of(c.digraph.lengths()), true);
    cert["parameters"] = Json{{"q", (c.plan.p - 3) / 4},
                              {"a", c.plan.a},
                              {"p", c.plan.p},
                              {"steps", c.plan.steps},
                              {"starts", c.plan.starts},
                              {"segment_length", c.plan.segment_length}};
    cert["k"] = c.coloring.k();
    cert["assignment"] = c.coloring.colors();
    cert["verified"] = report_flags(c.report);
    cert["violations"] = report_violations(c.report);
    cert["provenance"] = provenance("residue-walk-digraph",
                                    "dac(C_{8q^2+2(a+4)q+a+3}(1,a)) >= 4q+3 for prime 4q+3 and non-residue a");
    return cert;
}

Json certificate(const PlaneEdgeColoring& c, const DifferenceSet& d) {
    auto cert = skeleton("edge-coloring", c.graph.order(), lengths_of(c.graph.lengths()), false);
    Json matchings = Json::array();
    for (const auto& m : c.decomposition.matchings) {
        Json chords = Json::array();
        for (Edge e : m) chords.push_back(edge_key(e));
        matchings.push_back(std::move(chords));
    }
    cert["parameters"] = Json{{"q", d.order()},
                              {"D", d.elements()},
                              {"t", c.decomposition.t},
                              {"matchings", std::move(matchings)},
                              {"color_layout", "line*t + matching"}};
    cert["k"] = c.coloring.k();
    cert["assignment"] = edge_assignment(c.graph, c.coloring);
    cert["verified"] = report_flags(c.report);
    cert["violations"] = report_violations(c.report);
    cert["provenance"] = provenance("plane-edge-coloring",
                                    "alpha_1(C_n(J)) >= t*n when the chords of D with lengths in J form t perfect matchings");
    return cert;
}

std::string_view to_string(Quantity q) noexcept {
    switch (q) {
    case Quantity::Achromatic: return "alpha";
    case Quantity::Diachromatic: return "dac";
    case Quantity::AchromaticIndex: return "alpha1";
    case Quantity::Chromatic: return "chi";
    case Quantity::Dichromatic: return "dc";
    }
    return "?";
}

Quantity parse_quantity(std::string_view name) {
    for (auto q : {Quantity::Achromatic, Quantity::Diachromatic, Quantity::AchromaticIndex, Quantity::Chromatic,
                   Quantity::Dichromatic}) {
        if (to_string(q) == name) return q;
    }
    throw Error(ErrorCode::PreconditionFailed, "unknown quantity `" + std::string(name) + "`");
}

Json search_certificate(Quantity quantity, int n, const std::vector<int>& lengths, const ExtremalResult& result) {
    const bool directed = quantity == Quantity::Diachromatic || quantity == Quantity::Dichromatic;
    auto cert = skeleton("exact-search", n, lengths, directed);
    cert["parameters"] = Json{{"quantity", to_string(quantity)},
                              {"proof_of_optimality", result.proof_of_optimality},
                              {"status", to_string(result.status)},
                              {"explored_nodes", result.explored_nodes}};
    cert["k"] = result.value;

    VerificationReport report;
    if (quantity == Quantity::AchromaticIndex) {
        CirculantGraph g(n, lengths);
        auto coloring = edge_witness(g, result);
        report = verify_edge_coloring(g, coloring);
        cert["assignment"] = edge_assignment(g, coloring);
    } else if (directed) {
        CirculantDigraph d(n, lengths);
        report = verify_digraph_coloring(d, VertexColoring(result.value, result.witness));
        cert["assignment"] = result.witness;
    } else {
        CirculantGraph g(n, lengths);
        report = verify_vertex_coloring(g, VertexColoring(result.value, result.witness));
        cert["assignment"] = result.witness;
    }
    cert["verified"] = report_flags(report);
    cert["violations"] = report_violations(report);
    cert["provenance"] = provenance("exact-search", "exhaustive restricted-growth partition search");
    return cert;
}

Json size_bound_certificate(std::int64_t m, GraphKind kind) {
    auto cert = skeleton("bound", 0, {}, kind == GraphKind::Digraph);
    cert["instance"].erase("n");
    cert["instance"].erase("J");
    cert["parameters"] = Json{{"mode", "size"}, {"m", m}};
    cert["k"] = size_upper_bound(m, kind);
    cert["verified"] = bound_flags(true);
    cert["provenance"] = provenance("size-bound", kind == GraphKind::Graph ? "floor(1/2 + sqrt(1/4 + 2m))"
                                                                          : "floor(1/2 + sqrt(1/4 + m))");
    return cert;
}

Json profile_certificate(const CirculantGraph& g, Quantity target) {
    auto profile = fg_upper_bound(g.order(), g.degree());
    auto cert = skeleton("bound", g.order(), lengths_of(g.lengths()), false);
    cert["parameters"] = profile_parameters(profile, target);
    cert["k"] = profile_target_bound(profile, target);
    cert["verified"] = bound_flags(true);
    cert["provenance"] = provenance("regular-graph-bounds",
                                    target == Quantity::AchromaticIndex
                                        ? "min(max_x min(floor(nr/2x), g_{n,r}(x)), line-graph size bound)"
                                        : "floor(1/2 + sqrt(1/4 + 2m))");
    return cert;
}

Json digraph_bound_certificate(const CirculantDigraph& d) {
    auto cert = size_bound_certificate(d.arc_count(), GraphKind::Digraph);
    cert["instance"] = Json{{"n", d.order()}, {"J", lengths_of(d.lengths())}, {"directed", true}};
    return cert;
}

Json cycle_certificate(std::int64_t n) {
    auto cert = skeleton("bound", static_cast<int>(n), {1}, false);
    cert["parameters"] = Json{{"mode", "cycle"}};
    cert["k"] = cycle_achromatic(n);
    cert["verified"] = bound_flags(true);
    cert["provenance"] = provenance("cycle-formula", "max{k : k*floor(k/2) <= n} - s(n)");
    return cert;
}

Json difference_set_certificate(const DifferenceSet& d, bool with_chords) {
    auto cert = skeleton("difference-set", d.modulus(), {}, false);
    Json params{{"q", d.order()}, {"D", d.elements()}};
    if (with_chords) {
        Json chords = Json::array();
        auto table = chord_table(d);
        for (std::size_t i = 0; i < table.by_length.size(); ++i) {
            chords.push_back(Json{{"length", i + 1}, {"chord", edge_key(table.by_length[i])}});
        }
        params["chords"] = std::move(chords);
    }
    cert["parameters"] = std::move(params);
    cert["verified"] = Json{{"difference_set", true}};
    cert["provenance"] = provenance("difference-set", "every nonzero residue is a unique difference of D");
    return cert;
}

Json difference_set_failure_certificate(int n, const std::vector<int>& elements, const NotDifferenceSet& failure) {
    auto cert = skeleton("difference-set", n, {}, false);
    auto sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    cert["parameters"] = Json{{"D", sorted}};
    cert["verified"] = Json{{"difference_set", false}};
    cert["violations"] = Json{{"difference", failure.difference()}, {"representations", failure.representations()}};
    cert["provenance"] = provenance("difference-set", "every nonzero residue is a unique difference of D");
    return cert;
}

Reverification reverify(const Json& cert) {
    Reverification out;
    try {
        if (cert.at("schema_version").get<int>() != certificate_schema_version) {
            throw Error(ErrorCode::BadCertificate, "unsupported schema_version");
        }
        const auto kind = cert.at("kind").get<std::string>();
        const auto& instance = cert.at("instance");
        const auto& params = cert.at("parameters");

        if (kind == "vertex-coloring" || kind == "digraph-coloring" || kind == "edge-coloring" ||
            kind == "exact-search") {
            const int n = instance.at("n").get<int>();
            const auto lengths = instance.at("J").get<std::vector<int>>();
            const int k = cert.at("k").get<int>();
            const bool directed = instance.at("directed").get<bool>();
            bool edges = kind == "edge-coloring";
            if (kind == "exact-search") {
                edges = parse_quantity(params.at("quantity").get<std::string>()) == Quantity::AchromaticIndex;
            }
            VerificationReport report;
            if (edges) {
                CirculantGraph g(n, lengths);
                report = verify_edge_coloring(g, parse_edge_assignment(cert.at("assignment"), k));
            } else if (directed) {
                CirculantDigraph d(n, lengths);
                report = verify_digraph_coloring(d, VertexColoring(k, cert.at("assignment").get<std::vector<int>>()));
            } else {
                CirculantGraph g(n, lengths);
                report = verify_vertex_coloring(g, VertexColoring(k, cert.at("assignment").get<std::vector<int>>()));
            }
            out.verified = report_flags(report);
            out.violations = report_violations(report);
            out.all_verified = report.verified();
        } else if (kind == "bound") {
            auto fresh = recompute_bound(cert);
            bool same = fresh.at("k") == cert.at("k") && fresh.at("parameters") == params;
            out.verified = bound_flags(same);
            out.violations = Json::object();
            out.all_verified = same;
        } else if (kind == "difference-set") {
            const int n = instance.at("n").get<int>();
            const auto elements = params.at("D").get<std::vector<int>>();
            try {
                auto d = validate_difference_set(elements, n);
                auto fresh = difference_set_certificate(d, params.contains("chords"));
                out.verified = fresh.at("verified");
                out.violations = fresh.at("violations");
                out.all_verified = true;
            } catch (const NotDifferenceSet& failure) {
                auto fresh = difference_set_failure_certificate(n, elements, failure);
                out.verified = fresh.at("verified");
                out.violations = fresh.at("violations");
            }
        } else {
            throw Error(ErrorCode::BadCertificate, "unknown certificate kind `" + kind + "`");
        }
        out.matches_stored = out.verified == cert.at("verified") && out.violations == cert.at("violations");
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadCertificate, std::string("malformed certificate: ") + e.what());
    }
    return out;
}

std::string dump(const Json& cert) { return cert.dump(2) + "\n"; }

} // namespace chroma
