"""partgraph: the single-cell-transfer graph on integer partitions.

Build G_n, measure its local invariants and large-scale morphology, emit
summary tables and graph exports, and render a deterministic SVG atlas.
"""

from .atlas import (AtlasLayout, MODES, color_for, layout, render_atlas,
                    render_focus, render_panel, render_series)
from .graph import (DEFAULT_MAX_N, PartitionGraph, SizeLimitError,
                    build_graph, distances_from, neighbors)
from .local_invariants import (DEFAULT_CLIQUE_BOUND, LocalInvariants,
                               NeighborhoodGraph, clique_number,
                               layers_and_spectra, local_simplex_dimension,
                               neighborhood_graph)
from .morphology import (INFINITE, THRESHOLD_FEATURES, ConcentrationRecord,
                         EdgeOrientation, GraphAnalysis, MorphologyReport,
                         SpineResult, analyze, antenna_vertices,
                         axial_distance, boundary_framework, central_region,
                         classify_oriented_edge, concentration_scan,
                         emergence_threshold, main_chain, morphology_report,
                         self_conjugate_axis, side_edges, spine)
from .partitions import (Partition, ShapeFlags, conjugate,
                         enumerate_partitions, format_parts, is_hook,
                         is_rectangular, is_self_conjugate, is_staircase,
                         is_two_part, lex_compare, parse_parts, predicates,
                         validate)
from .reporting import (EXPORT_FORMATS, BasicCountsRow, CentralSpineRow,
                        MaximaRow, SpectraRow, basic_counts, central_spine,
                        export_csv, export_dot, export_graph, export_json,
                        maxima, rows_to_csv, rows_to_text, spectra_report)

__version__ = "0.1.0"

__all__ = [
    "AtlasLayout", "BasicCountsRow", "CentralSpineRow", "ConcentrationRecord",
    "DEFAULT_CLIQUE_BOUND", "DEFAULT_MAX_N", "EXPORT_FORMATS",
    "EdgeOrientation", "GraphAnalysis", "INFINITE", "LocalInvariants",
    "MODES", "MaximaRow", "MorphologyReport", "NeighborhoodGraph",
    "Partition", "PartitionGraph", "ShapeFlags", "SizeLimitError",
    "SpectraRow", "SpineResult", "THRESHOLD_FEATURES", "analyze",
    "antenna_vertices", "axial_distance", "basic_counts",
    "boundary_framework", "build_graph", "central_region", "central_spine",
    "classify_oriented_edge", "clique_number", "color_for",
    "concentration_scan", "conjugate", "distances_from",
    "emergence_threshold", "enumerate_partitions", "export_csv",
    "export_dot", "export_graph", "export_json", "format_parts", "is_hook",
    "is_rectangular", "is_self_conjugate", "is_staircase", "is_two_part",
    "layers_and_spectra", "layout", "lex_compare", "local_simplex_dimension",
    "main_chain", "maxima", "morphology_report", "neighborhood_graph",
    "neighbors", "parse_parts", "predicates", "render_atlas", "render_focus",
    "render_panel", "render_series", "rows_to_csv", "rows_to_text",
    "self_conjugate_axis", "side_edges", "spectra_report", "spine",
    "validate",
]
