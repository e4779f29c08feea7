#include "chroma/dot.hpp"

#include <sstream>

namespace chroma {

namespace {

void write_header(std::ostringstream& os, const char* keyword, int n, std::span<const int> lengths) {
    os << keyword << " circulant {\n";
    os << "  label=\"n=" << n << " J=";
    for (std::size_t i = 0; i < lengths.size(); ++i) os << (i ? "," : "") << lengths[i];
    os << "\";\n";
}

void write_vertices(std::ostringstream& os, int n, const VertexColoring* c) {
    for (int v = 0; v < n; ++v) {
        os << "  v" << v;
        if (c) os << " [label=\"v" << v << ":" << (*c)[static_cast<std::size_t>(v)] << "\"]";
        os << ";\n";
    }
}

std::string graph_dot(const CirculantGraph& g, const VertexColoring* vc, const EdgeColoring* ec) {
    std::ostringstream os;
    write_header(os, "graph", g.order(), g.lengths());
    write_vertices(os, g.order(), vc);
    for (Edge e : g.edges()) {
        os << "  v" << e.u << " -- v" << e.v;
        if (ec) os << " [label=\"" << ec->at(e) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string digraph_dot(const CirculantDigraph& d, const VertexColoring* vc) {
    std::ostringstream os;
    write_header(os, "digraph", d.order(), d.lengths());
    write_vertices(os, d.order(), vc);
    for (Arc a : d.arcs()) os << "  v" << a.tail << " -> v" << a.head << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace

std::string to_dot(const CirculantGraph& g) { return graph_dot(g, nullptr, nullptr); }
std::string to_dot(const CirculantGraph& g, const VertexColoring& c) { return graph_dot(g, &c, nullptr); }
std::string to_dot(const CirculantGraph& g, const EdgeColoring& c) { return graph_dot(g, nullptr, &c); }
std::string to_dot(const CirculantDigraph& d) { return digraph_dot(d, nullptr); }
std::string to_dot(const CirculantDigraph& d, const VertexColoring& c) { return digraph_dot(d, &c); }

} // namespace chroma
