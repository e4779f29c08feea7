#include "chroma/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chroma/certificate.hpp"
#include "chroma/dot.hpp"
#include "chroma/numtheory.hpp"

namespace chroma {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_unverified = 2;

std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::PreconditionFailed, "cannot write " + path);
    f << content;
}

struct Options {
    unsigned threads = 1;
    std::string out;
    std::string dot;
    std::string cert;

    int p = 0;
    int q = 0;
    int a = 0;
    int n = 0;
    std::vector<int> lengths;
    std::vector<int> elements;
    bool directed = false;
    bool literal = false;

    std::int64_t m = -1;
    std::int64_t cycle = -1;
    std::string target = "alpha";
    std::string source = "auto";

    int max_vertices = SearchBudget{}.max_vertices;
    int max_edges = SearchBudget{}.max_edges;
    double time_limit = SearchBudget{}.time_limit.count();
};

class Runner {
public:
    Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

    int qr() {
        auto rc = classify_residues(opt_.p);
        out_ << "p: " << rc.modulus << "\n"
             << "class: " << rc.residue_class << " (mod 4)\n"
             << "qr: " << join(rc.qr) << "\n"
             << "nqr: " << join(rc.nqr) << "\n"
             << "length_reps: " << join(rc.length_reps) << "\n";
        return exit_ok;
    }

    int graph() {
        if (opt_.directed) {
            CirculantDigraph d(opt_.n, opt_.lengths);
            out_ << "kind: digraph\nn: " << d.order() << "\nJ: " << join({d.lengths().begin(), d.lengths().end()})
                 << "\narcs: " << d.arc_count() << "\nout_degree: " << d.lengths().size() << "\n";
            if (!opt_.dot.empty()) write_file(opt_.dot, to_dot(d));
        } else {
            CirculantGraph g(opt_.n, opt_.lengths);
            out_ << "kind: graph\nn: " << g.order() << "\nJ: " << join({g.lengths().begin(), g.lengths().end()})
                 << "\nedges: " << g.edge_count() << "\ndegree: " << g.degree() << "\n";
            if (!opt_.dot.empty()) write_file(opt_.dot, to_dot(g));
        }
        return exit_ok;
    }

    int color_graph() {
        auto built = build_residue_walk_graph(opt_.q, opt_.a,
                                              opt_.literal ? StepOrder::Ascending : StepOrder::AscendingThenSearch);
        if (!opt_.dot.empty()) write_file(opt_.dot, to_dot(built.graph, built.coloring));
        return emit(certificate(built), built.report.verified());
    }

    int color_digraph() {
        auto built = build_residue_walk_digraph(opt_.q, opt_.a);
        if (!opt_.dot.empty()) write_file(opt_.dot, to_dot(built.digraph, built.coloring));
        return emit(certificate(built), built.report.verified());
    }

    int edge_color() {
        auto d = validate_difference_set(opt_.elements, opt_.n);
        try {
            auto built = plane_edge_coloring(d, opt_.lengths);
            if (!opt_.dot.empty()) write_file(opt_.dot, to_dot(built.graph, built.coloring));
            return emit(certificate(built, d), true);
        } catch (const ConstructionNotVerified<PlaneEdgeColoring>& failure) {
            return emit(certificate(failure.construction(), d), false);
        }
    }

    int bounds() {
        if (opt_.cycle >= 0) return emit(cycle_certificate(opt_.cycle), true);
        if (opt_.m >= 0) {
            return emit(size_bound_certificate(opt_.m, opt_.directed ? GraphKind::Digraph : GraphKind::Graph), true);
        }
        if (opt_.n == 0 || opt_.lengths.empty()) {
            throw Error(ErrorCode::PreconditionFailed, "bounds needs --cycle, --m, or --n with --J");
        }
        if (opt_.directed) return emit(digraph_bound_certificate(CirculantDigraph(opt_.n, opt_.lengths)), true);
        return emit(profile_certificate(CirculantGraph(opt_.n, opt_.lengths), parse_quantity(opt_.target)), true);
    }

    int find_ds() {
        auto source = DifferenceSetSource::Auto;
        if (opt_.source == "table") source = DifferenceSetSource::Table;
        if (opt_.source == "search") source = DifferenceSetSource::Search;
        return emit(difference_set_certificate(search_difference_set(opt_.q, source), false), true);
    }

    int check_ds(bool with_chords) {
        try {
            auto d = validate_difference_set(opt_.elements, opt_.n);
            if (with_chords && opt_.out.empty()) {
                auto table = chord_table(d);
                for (std::size_t i = 0; i < table.by_length.size(); ++i) {
                    err_ << "length " << i + 1 << ": " << edge_key(table.by_length[i]) << "\n";
                }
            }
            return emit(difference_set_certificate(d, with_chords), true);
        } catch (const NotDifferenceSet& failure) {
            return emit(difference_set_failure_certificate(opt_.n, opt_.elements, failure), false);
        }
    }

    int brute(Quantity quantity) {
        SearchBudget budget;
        budget.max_vertices = opt_.max_vertices;
        budget.max_edges = opt_.max_edges;
        budget.time_limit = std::chrono::duration<double>(opt_.time_limit);
        budget.threads = std::max(1U, opt_.threads);

        ExtremalResult result;
        switch (quantity) {
        case Quantity::Achromatic: result = exact_achromatic(CirculantGraph(opt_.n, opt_.lengths), budget); break;
        case Quantity::Diachromatic: result = exact_diachromatic(CirculantDigraph(opt_.n, opt_.lengths), budget); break;
        case Quantity::AchromaticIndex:
            result = exact_achromatic_index(CirculantGraph(opt_.n, opt_.lengths), budget);
            break;
        case Quantity::Chromatic: result = exact_chromatic_numbers(CirculantGraph(opt_.n, opt_.lengths), budget); break;
        case Quantity::Dichromatic:
            result = exact_chromatic_numbers(CirculantDigraph(opt_.n, opt_.lengths), budget);
            break;
        }
        auto cert = search_certificate(quantity, opt_.n, opt_.lengths, result);
        const bool ok = cert["verified"]["proper"].get<bool>() && cert["verified"]["complete"].get<bool>() &&
                        cert["verified"]["acyclic"] != false;
        return emit(cert, ok);
    }

    int verify() {
        std::ifstream f(opt_.cert);
        if (!f) throw Error(ErrorCode::PreconditionFailed, "cannot read " + opt_.cert);
        Json cert;
        try {
            cert = Json::parse(f);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorCode::BadCertificate, std::string("certificate is not JSON: ") + e.what());
        }
        auto check = reverify(cert);
        out_ << "kind: " << cert.at("kind").get<std::string>() << "\n"
             << "verified: " << check.verified.dump() << "\n"
             << "matches_stored: " << (check.matches_stored ? "true" : "false") << "\n";
        if (!check.matches_stored) {
            err_ << "stored flags " << cert.at("verified").dump() << " differ from recomputed "
                 << check.verified.dump() << "\n";
        }
        return check.matches_stored && check.all_verified ? exit_ok : exit_unverified;
    }

private:
    int emit(const Json& cert, bool verified) {
        auto text = dump(cert);
        if (opt_.out.empty()) {
            out_ << text;
        } else {
            write_file(opt_.out, text);
            out_ << cert.at("kind").get<std::string>() << ": k=" << cert.at("k").dump()
                 << " verified=" << cert.at("verified").dump() << " -> " << opt_.out << "\n";
        }
        if (!verified) err_ << "verification failed; see the certificate's violations\n";
        return verified ? exit_ok : exit_unverified;
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
};

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Complete colourings of circulant graphs and digraphs", "chroma"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(tool_version()));
    app.add_option("--threads", opt.threads, "Cap on search worker threads")->check(CLI::PositiveNumber);

    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", opt.out, "Write the certificate to FILE"); };
    auto add_dot = [&](CLI::App* cmd) { cmd->add_option("--dot", opt.dot, "Write Graphviz DOT to FILE"); };
    auto add_lengths = [&](CLI::App* cmd, bool required) {
        auto* o = cmd->add_option("--J", opt.lengths, "Comma-separated length set")->delimiter(',');
        if (required) o->required();
    };

    std::function<int(Runner&)> action;

    auto* qr = app.add_subcommand("qr", "Quadratic residues of an odd prime");
    qr->add_option("--p", opt.p, "Odd prime modulus")->required();
    qr->callback([&] { action = [](Runner& r) { return r.qr(); }; });

    auto* graph = app.add_subcommand("graph", "Build a circulant graph or digraph");
    graph->add_option("--n", opt.n, "Number of vertices")->required();
    add_lengths(graph, true);
    graph->add_flag("--directed", opt.directed, "Build the circulant digraph");
    add_dot(graph);
    graph->callback([&] { action = [](Runner& r) { return r.graph(); }; });

    auto* cg = app.add_subcommand("color-graph", "Residue-walk colouring of C_{4q^2+aq+1}(1,a)");
    cg->add_option("--q", opt.q)->required();
    cg->add_option("--a", opt.a)->required();
    cg->add_flag("--literal", opt.literal, "Only try the ascending step order");
    add_out(cg);
    add_dot(cg);
    cg->callback([&] { action = [](Runner& r) { return r.color_graph(); }; });

    auto* cd = app.add_subcommand("color-digraph", "Residue-walk colouring of C->_{8q^2+2(a+4)q+a+3}(1,a)");
    cd->add_option("--q", opt.q)->required();
    cd->add_option("--a", opt.a)->required();
    add_out(cd);
    add_dot(cd);
    cd->callback([&] { action = [](Runner& r) { return r.color_digraph(); }; });

    auto* ec = app.add_subcommand("edge-color", "Complete edge colouring from a cyclic projective plane");
    ec->add_option("--n", opt.n)->required();
    ec->add_option("--D", opt.elements, "Difference set")->delimiter(',')->required();
    add_lengths(ec, true);
    add_out(ec);
    add_dot(ec);
    ec->callback([&] { action = [](Runner& r) { return r.edge_color(); }; });

    auto* bd = app.add_subcommand("bounds", "Upper bounds and the cycle formula");
    bd->add_option("--n", opt.n);
    add_lengths(bd, false);
    bd->add_flag("--directed", opt.directed);
    bd->add_option("--m", opt.m, "Size (edges or arcs)")->check(CLI::NonNegativeNumber);
    bd->add_option("--cycle", opt.cycle, "Achromatic number of the cycle C_N")->check(CLI::Range(3, 1 << 30));
    bd->add_option("--target", opt.target, "alpha or alpha1")->check(CLI::IsMember({"alpha", "alpha1"}));
    add_out(bd);
    bd->callback([&] { action = [](Runner& r) { return r.bounds(); }; });

    auto* plane = app.add_subcommand("plane", "Planar difference sets");
    plane->require_subcommand(1);
    auto* find = plane->add_subcommand("find-ds", "Difference set of order q");
    find->add_option("--q", opt.q)->required();
    find->add_option("--source", opt.source)->check(CLI::IsMember({"auto", "table", "search"}));
    add_out(find);
    find->callback([&] { action = [](Runner& r) { return r.find_ds(); }; });
    for (const char* name : {"check-ds", "chords"}) {
        const bool chords = std::string(name) == "chords";
        auto* cmd = plane->add_subcommand(name, chords ? "Chord lengths of a difference set" : "Validate a difference set");
        cmd->add_option("--n", opt.n)->required();
        cmd->add_option("--D", opt.elements)->delimiter(',')->required();
        add_out(cmd);
        cmd->callback([&, chords] { action = [chords](Runner& r) { return r.check_ds(chords); }; });
    }

    auto* brute = app.add_subcommand("brute", "Exact extremal colour counts by exhaustive search");
    brute->require_subcommand(1);
    for (auto quantity : {Quantity::Achromatic, Quantity::Diachromatic, Quantity::AchromaticIndex, Quantity::Chromatic,
                          Quantity::Dichromatic}) {
        auto* cmd = brute->add_subcommand(std::string(to_string(quantity)));
        cmd->add_option("--n", opt.n)->required();
        add_lengths(cmd, true);
        cmd->add_option("--max-vertices", opt.max_vertices);
        cmd->add_option("--max-edges", opt.max_edges);
        cmd->add_option("--time-limit", opt.time_limit, "Wall-clock seconds");
        add_out(cmd);
        cmd->callback([&, quantity] { action = [quantity](Runner& r) { return r.brute(quantity); }; });
    }

    auto* verify = app.add_subcommand("verify", "Re-verify a certificate");
    verify->add_option("--cert", opt.cert)->required();
    verify->callback([&] { action = [](Runner& r) { return r.verify(); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    Runner runner(opt, out, err);
    try {
        return action(runner);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_usage;
    }
}

} // namespace chroma
