from .coloring import (
    ChromaticResult,
    ColorabilityResult,
    Coloring,
    CriticalityReport,
    Verdict,
    chromatic_number,
    greedy_coloring,
    is_critical,
    is_k_colorable,
)
from .dimacs import export_dimacs, parse_dimacs
from .intersection import (
    IntersectionGraph,
    TriangleCheck,
    VertexLabel,
    clique_number,
    greedy_clique,
    intersection_graph,
    is_triangle_free,
)

__all__ = [
    "ChromaticResult",
    "ColorabilityResult",
    "Coloring",
    "CriticalityReport",
    "Verdict",
    "chromatic_number",
    "greedy_coloring",
    "is_critical",
    "is_k_colorable",
    "export_dimacs",
    "parse_dimacs",
    "IntersectionGraph",
    "TriangleCheck",
    "VertexLabel",
    "clique_number",
    "greedy_clique",
    "intersection_graph",
    "is_triangle_free",
]
