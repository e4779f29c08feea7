#pragma once

#include <string>

#include "chroma/circulant.hpp"
#include "chroma/coloring.hpp"

namespace chroma {

// Graphviz export. Vertices are named v0..v{n-1}; edges follow
// CirculantGraph::edges(), arcs follow CirculantDigraph::arcs().
std::string to_dot(const CirculantGraph& g);
std::string to_dot(const CirculantGraph& g, const VertexColoring& c);
std::string to_dot(const CirculantGraph& g, const EdgeColoring& c);
std::string to_dot(const CirculantDigraph& d);
std::string to_dot(const CirculantDigraph& d, const VertexColoring& c);

} // namespace chroma
