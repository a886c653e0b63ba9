"""Q-index (signless Laplacian spectral radius) tools for graphs with no short
odd cycles: constructions, exact and numeric spectra, equitable quotients,
degree bounds, and exhaustive extremal search."""

from .graph import Graph, GraphError, from_graph6, parse_graph, to_graph6
from .kernels import BACKEND
from .spectral import (IntegerPolynomial, char_poly, largest_real_root, perron_vector,
                       q_index, signless_laplacian)
from .partitions import VertexPartition, quotient, is_equitable, verify_quotient_eigenvalue
from .odd_cycle import is_admissible, is_bipartite, odd_girth, shortest_odd_cycle
from .search import (canonical_form, certify_theorem_1_3, certify_theorem_1_4,
                     classical_edge_bounds, is_isomorphic, max_q_by_order, max_q_by_size)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Graph", "GraphError", "IntegerPolynomial", "VertexPartition",
    "canonical_form", "certify_theorem_1_3", "certify_theorem_1_4", "char_poly",
    "classical_edge_bounds", "from_graph6", "is_admissible", "is_bipartite",
    "is_equitable", "is_isomorphic", "largest_real_root", "max_q_by_order",
    "max_q_by_size", "odd_girth", "parse_graph", "perron_vector", "q_index",
    "quotient", "shortest_odd_cycle", "signless_laplacian", "to_graph6",
    "verify_quotient_eigenvalue",
]
