#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chroma/bounds.hpp"
#include "chroma/certificate.hpp"
#include "chroma/cli.hpp"
#include "chroma/constructions.hpp"
#include "chroma/dot.hpp"
#include "chroma/numtheory.hpp"
#include "chroma/planes.hpp"
#include "chroma/search.hpp"

namespace py = pybind11;
using namespace chroma;

namespace {

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["proper"] = r.proper;
    d["complete"] = r.complete;
    d["acyclic"] = r.acyclic ? py::cast(*r.acyclic) : py::none();
    py::list conflicts;
    for (const auto& c : r.proper_violations) {
        py::list item;
        item.append(py::make_tuple(c.first.u, c.first.v));
        if (c.second) item.append(py::make_tuple(c.second->u, c.second->v));
        conflicts.append(py::tuple(item));
    }
    d["proper_violations"] = conflicts;
    d["missing_pairs"] = r.missing_pairs;
    d["monochromatic_cycle"] = r.monochromatic_cycle;
    d["verified"] = r.verified();
    return d;
}

py::dict result_dict(const ExtremalResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["witness"] = r.witness;
    d["proof_of_optimality"] = r.proof_of_optimality;
    d["explored_nodes"] = r.explored_nodes;
    d["status"] = std::string(to_string(r.status));
    return d;
}

SearchBudget budget(int max_vertices, int max_edges, double time_limit, unsigned threads) {
    SearchBudget b;
    b.max_vertices = max_vertices;
    b.max_edges = max_edges;
    b.time_limit = std::chrono::duration<double>(time_limit);
    b.threads = threads;
    return b;
}

std::map<std::pair<int, int>, int> edge_colors(const EdgeColoring& c) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& [e, col] : c.colors()) out[{e.u, e.v}] = col;
    return out;
}

EdgeColoring to_edge_coloring(int k, const std::map<std::pair<int, int>, int>& colors) {
    std::map<Edge, int> out;
    for (const auto& [e, col] : colors) out[Edge::canonical(e.first, e.second)] = col;
    return EdgeColoring(k, std::move(out));
}

} // namespace

PYBIND11_MODULE(_chroma, m) {
    m.doc() = "Complete colourings of circulant graphs and digraphs";
    m.attr("__version__") = std::string(tool_version());

    static py::exception<Error> chroma_error(m, "ChromaError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            // args = (code, message)
            py::tuple args = py::make_tuple(std::string(to_string(e.code())), e.what());
            PyErr_SetObject(chroma_error.ptr(), args.ptr());
        }
    });

    m.def("is_prime", &is_prime, py::arg("n"));
    m.def(
        "classify_residues",
        [](int p) {
            auto r = classify_residues(p);
            py::dict d;
            d["p"] = r.modulus;
            d["qr"] = r.qr;
            d["nqr"] = r.nqr;
            d["length_reps"] = r.length_reps;
            d["residue_class"] = r.residue_class;
            return d;
        },
        py::arg("p"));

    py::class_<CirculantGraph>(m, "CirculantGraph")
        .def(py::init<int, std::vector<int>>(), py::arg("n"), py::arg("lengths"))
        .def_property_readonly("n", &CirculantGraph::order)
        .def_property_readonly("lengths",
                               [](const CirculantGraph& g) { return std::vector<int>(g.lengths().begin(), g.lengths().end()); })
        .def_property_readonly("degree", &CirculantGraph::degree)
        .def_property_readonly("edge_count", &CirculantGraph::edge_count)
        .def("adjacent", &CirculantGraph::adjacent)
        .def("neighbors", &CirculantGraph::neighbors)
        .def("edges",
             [](const CirculantGraph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (Edge e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("to_dot", [](const CirculantGraph& g) { return to_dot(g); })
        .def("__repr__", [](const CirculantGraph& g) {
            std::ostringstream s;
            s << "CirculantGraph(n=" << g.order() << ", edges=" << g.edge_count() << ")";
            return s.str();
        });

    py::class_<CirculantDigraph>(m, "CirculantDigraph")
        .def(py::init<int, std::vector<int>>(), py::arg("n"), py::arg("lengths"))
        .def_property_readonly("n", &CirculantDigraph::order)
        .def_property_readonly(
            "lengths", [](const CirculantDigraph& d) { return std::vector<int>(d.lengths().begin(), d.lengths().end()); })
        .def_property_readonly("arc_count", &CirculantDigraph::arc_count)
        .def("has_arc", &CirculantDigraph::has_arc)
        .def("arcs",
             [](const CirculantDigraph& d) {
                 std::vector<std::pair<int, int>> out;
                 for (Arc a : d.arcs()) out.emplace_back(a.tail, a.head);
                 return out;
             })
        .def("to_dot", [](const CirculantDigraph& d) { return to_dot(d); });

    m.def(
        "verify_vertex_coloring",
        [](const CirculantGraph& g, const std::vector<int>& colors, int k) {
            return report_dict(verify_vertex_coloring(g, VertexColoring(k, colors)));
        },
        py::arg("graph"), py::arg("colors"), py::arg("k"));
    m.def(
        "verify_digraph_coloring",
        [](const CirculantDigraph& d, const std::vector<int>& colors, int k) {
            return report_dict(verify_digraph_coloring(d, VertexColoring(k, colors)));
        },
        py::arg("digraph"), py::arg("colors"), py::arg("k"));
    m.def(
        "verify_edge_coloring",
        [](const CirculantGraph& g, const std::map<std::pair<int, int>, int>& colors, int k) {
            return report_dict(verify_edge_coloring(g, to_edge_coloring(k, colors)));
        },
        py::arg("graph"), py::arg("colors"), py::arg("k"));

    m.def(
        "residue_walk_graph_coloring",
        [](int q, int a, bool checked) {
            auto c = checked ? residue_walk_graph_coloring(q, a) : build_residue_walk_graph(q, a);
            py::dict d;
            d["graph"] = c.graph;
            d["colors"] = c.coloring.colors();
            d["k"] = c.coloring.k();
            d["steps"] = c.plan.steps;
            d["starts"] = c.plan.starts;
            d["report"] = report_dict(c.report);
            d["certificate"] = dump(certificate(c));
            return d;
        },
        py::arg("q"), py::arg("a"), py::arg("checked") = true);
    m.def(
        "residue_walk_digraph_coloring",
        [](int q, int a, bool checked) {
            auto c = checked ? residue_walk_digraph_coloring(q, a) : build_residue_walk_digraph(q, a);
            py::dict d;
            d["digraph"] = c.digraph;
            d["colors"] = c.coloring.colors();
            d["k"] = c.coloring.k();
            d["steps"] = c.plan.steps;
            d["starts"] = c.plan.starts;
            d["report"] = report_dict(c.report);
            d["certificate"] = dump(certificate(c));
            return d;
        },
        py::arg("q"), py::arg("a"), py::arg("checked") = true);

    m.def(
        "size_upper_bound",
        [](std::int64_t m_, bool directed) {
            return size_upper_bound(m_, directed ? GraphKind::Digraph : GraphKind::Graph);
        },
        py::arg("m"), py::arg("directed") = false);
    m.def(
        "fg_upper_bound",
        [](std::int64_t n, std::int64_t r) {
            auto p = fg_upper_bound(n, r);
            py::dict d;
            d["n"] = p.n;
            d["r"] = p.r;
            d["m"] = p.m;
            d["eq2_bound"] = p.eq2_bound;
            d["eq3_bound"] = p.eq3_bound;
            d["fg_bound"] = p.fg_bound;
            d["fg_argmax_x"] = p.fg_argmax_x;
            py::list table;
            for (const auto& row : p.fg_table) table.append(py::make_tuple(row.x, row.f_floor, row.g, row.min));
            d["fg_table"] = table;
            return d;
        },
        py::arg("n"), py::arg("r"));
    m.def("cycle_achromatic", &cycle_achromatic, py::arg("n"));

    m.def(
        "validate_difference_set",
        [](std::vector<int> elements, int n) { return validate_difference_set(std::move(elements), n).elements(); },
        py::arg("elements"), py::arg("n"));
    m.def(
        "search_difference_set",
        [](int q, const std::string& source) {
            auto src = source == "table"    ? DifferenceSetSource::Table
                       : source == "search" ? DifferenceSetSource::Search
                                            : DifferenceSetSource::Auto;
            return search_difference_set(q, src).elements();
        },
        py::arg("q"), py::arg("source") = "auto");
    m.def("reference_difference_sets", &reference_difference_sets);
    m.def(
        "chord_table",
        [](std::vector<int> elements, int n) {
            std::vector<std::pair<int, int>> out;
            for (Edge e : chord_table(validate_difference_set(std::move(elements), n)).by_length)
                out.emplace_back(e.u, e.v);
            return out;
        },
        py::arg("elements"), py::arg("n"));
    m.def(
        "plane_edge_coloring",
        [](std::vector<int> elements, int n, std::vector<int> lengths) {
            auto ds = validate_difference_set(std::move(elements), n);
            auto c = plane_edge_coloring(ds, std::move(lengths));
            py::dict d;
            d["graph"] = c.graph;
            d["t"] = c.decomposition.t;
            d["k"] = c.coloring.k();
            d["colors"] = edge_colors(c.coloring);
            d["report"] = report_dict(c.report);
            d["certificate"] = dump(certificate(c, ds));
            return d;
        },
        py::arg("elements"), py::arg("n"), py::arg("lengths"));

    m.def(
        "exact_achromatic",
        [](const CirculantGraph& g, int max_vertices, double time_limit, unsigned threads) {
            ExtremalResult r;
            {
                py::gil_scoped_release release;
                r = exact_achromatic(g, budget(max_vertices, 18, time_limit, threads));
            }
            return result_dict(r);
        },
        py::arg("graph"), py::arg("max_vertices") = 12, py::arg("time_limit") = 300.0, py::arg("threads") = 1);
    m.def(
        "exact_diachromatic",
        [](const CirculantDigraph& d, int max_vertices, double time_limit, unsigned threads) {
            ExtremalResult r;
            {
                py::gil_scoped_release release;
                r = exact_diachromatic(d, budget(max_vertices, 18, time_limit, threads));
            }
            return result_dict(r);
        },
        py::arg("digraph"), py::arg("max_vertices") = 12, py::arg("time_limit") = 300.0, py::arg("threads") = 1);
    m.def(
        "exact_achromatic_index",
        [](const CirculantGraph& g, int max_edges, double time_limit, unsigned threads) {
            ExtremalResult r;
            {
                py::gil_scoped_release release;
                r = exact_achromatic_index(g, budget(12, max_edges, time_limit, threads));
            }
            return result_dict(r);
        },
        py::arg("graph"), py::arg("max_edges") = 18, py::arg("time_limit") = 300.0, py::arg("threads") = 1);
    m.def(
        "exact_chromatic_number",
        [](const CirculantGraph& g, int max_vertices) {
            return result_dict(exact_chromatic_numbers(g, budget(max_vertices, 18, 300.0, 1)));
        },
        py::arg("graph"), py::arg("max_vertices") = 12);
    m.def(
        "exact_dichromatic_number",
        [](const CirculantDigraph& d, int max_vertices) {
            return result_dict(exact_chromatic_numbers(d, budget(max_vertices, 18, 300.0, 1)));
        },
        py::arg("digraph"), py::arg("max_vertices") = 12);

    m.def(
        "reverify",
        [](const std::string& text) {
            auto r = reverify(Json::parse(text));
            py::dict d;
            d["verified"] = r.verified.dump();
            d["violations"] = r.violations.dump();
            d["matches_stored"] = r.matches_stored;
            d["all_verified"] = r.all_verified;
            return d;
        },
        py::arg("certificate"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<std::string> full{"chroma"};
            full.insert(full.end(), args.begin(), args.end());
            std::vector<const char*> argv;
            for (auto& a : full) argv.push_back(a.c_str());
            std::ostringstream out, err;
            int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
