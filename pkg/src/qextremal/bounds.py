"""Degree-based upper bounds on the Q-index and their equality cases."""

from __future__ import annotations

from fractions import Fraction

from .graph import Graph, GraphError, is_connected
from .odd_cycle import bipartition


def edge_degree_bound(g: Graph) -> int:
    """max{d(u) + d(v) : uv an edge}."""
    deg = g.degrees()
    edges = g.edges()
    if not edges:
        raise GraphError("edge_degree_bound needs at least one edge")
    return max(deg[u] + deg[v] for u, v in edges)


def avg_neighbor_degree(g: Graph, u: int) -> Fraction:
    """m(u): the mean degree of the neighbours of u, as an exact fraction."""
    d = g.degree(u)
    if d == 0:
        raise GraphError(f"vertex {u} is isolated")
    deg = g.degrees()
    return Fraction(sum(deg[v] for v in g.neighbors(u)), d)


def degree_avg_bound(g: Graph) -> Fraction:
    """max{d(u) + m(u) : u a vertex}."""
    if any(d == 0 for d in g.degrees()):
        raise GraphError("degree_avg_bound needs a graph without isolated vertices")
    return max(g.degree(u) + avg_neighbor_degree(g, u) for u in range(g.order))


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) <= 1


def is_semiregular_bipartite(g: Graph) -> bool:
    """Bipartite with constant degree on each side (of every component's
    2-colouring).  Only meaningful as an equality case for connected graphs,
    where the bipartition is unique."""
    parts = bipartition(g)
    if parts is None:
        return False
    deg = g.degrees()
    return all(len({deg[v] for v in side}) <= 1 for side in parts)


def equality_case(g: Graph) -> bool:
    """Regular or semi-regular bipartite: when both bounds are attained by
    connected graphs."""
    return is_regular(g) or is_semiregular_bipartite(g)


def check_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphError("equality characterization applies to connected graphs")
