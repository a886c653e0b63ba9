"""Bipartiteness, odd girth and the forbidden-short-odd-cycle class."""

from __future__ import annotations

import math

from . import kernels
from .graph import Graph


def bipartition(g: Graph) -> tuple[list[int], list[int]] | None:
    """A 2-colouring as (colour 0, colour 1) with the least vertex of every
    component coloured 0, or None if g has an odd cycle."""
    color = [-1] * g.order
    for comp in g.components():
        color[comp[0]] = 0
        stack = [comp[0]]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return None
    return ([v for v in range(g.order) if color[v] == 0],
            [v for v in range(g.order) if color[v] == 1])


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def odd_girth(g: Graph) -> float:
    """Length of a shortest odd cycle; ``math.inf`` when g is bipartite."""
    lengths = [x for x in kernels.odd_closed_walks(g.order, list(g.rows)) if x]
    return min(lengths) if lengths else math.inf


def is_admissible(g: Graph, k: int) -> bool:
    """Non-bipartite with no odd cycle of length <= 2k+1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    og = odd_girth(g)
    return not math.isinf(og) and og >= 2 * k + 3


def shortest_odd_cycle(g: Graph) -> list[int] | None:
    """Vertices of one shortest odd cycle in cyclic order, or None.

    Picks the least vertex v on a shortest odd closed walk and reconstructs
    the walk (v, even) -> (v, odd) in the bipartite double cover; a shortest
    odd closed walk is always a cycle."""
    lengths = kernels.odd_closed_walks(g.order, list(g.rows))
    cands = [(x, v) for v, x in enumerate(lengths) if x]
    if not cands:
        return None
    _, v = min(cands)
    parent = {(v, 0): None}
    frontier = [(v, 0)]
    while (v, 1) not in parent:
        nxt = []
        for u, p in frontier:
            for w in g.neighbors(u):
                state = (w, 1 - p)
                if state not in parent:
                    parent[state] = (u, p)
                    nxt.append(state)
        frontier = nxt
    walk = []
    state = (v, 1)
    while state is not None:
        walk.append(state[0])
        state = parent[state]
    walk.pop()  # the start (v, 0) repeats (v, 1)
    return walk[::-1]
