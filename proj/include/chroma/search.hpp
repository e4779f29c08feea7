#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

#include "chroma/circulant.hpp"
#include "chroma/coloring.hpp"

namespace chroma {

/// Instances above these limits are refused with BudgetExceeded.
struct SearchBudget {
    int max_vertices = 12;
    int max_edges = 18;
    std::chrono::duration<double> time_limit{300.0};
    unsigned threads = 1;
};

enum class SearchStatus { Exhausted, TimeLimit };

std::string_view to_string(SearchStatus status) noexcept;

/// Extremal colour count with a witness. For edge searches the witness is
/// indexed like CirculantGraph::edges().
struct ExtremalResult {
    int value = 0;
    std::vector<int> witness;
    bool proof_of_optimality = false;
    std::uint64_t explored_nodes = 0;
    SearchStatus status = SearchStatus::Exhausted;
};

/// Achromatic number: largest k with a complete proper k-colouring.
ExtremalResult exact_achromatic(const CirculantGraph& g, const SearchBudget& budget = {});
/// Diachromatic number: largest k with a complete acyclic k-colouring.
ExtremalResult exact_diachromatic(const CirculantDigraph& d, const SearchBudget& budget = {});
/// Achromatic index: largest k with a complete proper edge k-colouring.
ExtremalResult exact_achromatic_index(const CirculantGraph& g, const SearchBudget& budget = {});
/// Chromatic number of a graph.
ExtremalResult exact_chromatic_numbers(const CirculantGraph& g, const SearchBudget& budget = {});
/// Dichromatic number of a digraph (fewest colours with acyclic classes).
ExtremalResult exact_chromatic_numbers(const CirculantDigraph& d, const SearchBudget& budget = {});

EdgeColoring edge_witness(const CirculantGraph& g, const ExtremalResult& result);

} // namespace chroma
