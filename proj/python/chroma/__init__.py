"""Complete colourings of circulant graphs and digraphs."""

from ._chroma import (
    ChromaError,
    CirculantDigraph,
    CirculantGraph,
    __version__,
    chord_table,
    classify_residues,
    cycle_achromatic,
    exact_achromatic,
    exact_achromatic_index,
    exact_chromatic_number,
    exact_diachromatic,
    exact_dichromatic_number,
    fg_upper_bound,
    is_prime,
    plane_edge_coloring,
    reference_difference_sets,
    residue_walk_digraph_coloring,
    residue_walk_graph_coloring,
    reverify,
    run_cli,
    search_difference_set,
    size_upper_bound,
    validate_difference_set,
    verify_digraph_coloring,
    verify_edge_coloring,
    verify_vertex_coloring,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
