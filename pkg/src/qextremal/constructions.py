"""Named graph families and the edge transformations used around them.

Index layouts are fixed so that partitions can be rebuilt arithmetically:

* ``cycle(n)``: i ~ i+1 (mod n).  ``path(n)``: i ~ i+1.
* ``star(s)``: centre 0, leaves 1..s.
* ``blow_up(h, r)``: cell V_i is the index range starting at r_0+...+r_{i-1}.
* ``identify(g1, u1, g2, u2)``: g1 keeps 0..n1-1, u2 becomes u1, the other
  vertices of g2 follow in increasing order from n1.
* ``cycle_star(k, m)``: the cycle C_{2k+3} on 0..2k+2 with the star centre
  identified with vertex 0; leaves are 2k+3..m-1.
* ``s_nk(n, k)``: clique 0..k-1, independent set k..n-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

from .graph import Graph, GraphError
from .partitions import VertexPartition


# ---------------------------------------------------------------------------
# basic families
# ---------------------------------------------------------------------------

def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("a path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    if leaves < 0:
        raise GraphError("negative leaf count")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Sides 0..a-1 and a..a+b-1."""
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    out = Graph(0)
    for g in graphs:
        out = out.disjoint_union(g)
    return out


# ---------------------------------------------------------------------------
# blow-ups and identification
# ---------------------------------------------------------------------------

def blow_up(h: Graph, r: Sequence[int]) -> Graph:
    """Replace vertex i of h by an independent set of r[i] vertices, joining
    cells completely along the edges of h."""
    r = list(r)
    if len(r) != h.order:
        raise GraphError(f"blow-up vector has length {len(r)}, base graph order {h.order}")
    if any(x < 1 for x in r):
        raise GraphError("blow-up multiplicities must be positive")
    cells = VertexPartition.from_sizes(r).cells
    edges = []
    for i, j in h.edges():
        edges.extend((u, w) for u in cells[i] for w in cells[j])
    return Graph.from_edges(sum(r), edges)


def blow_up_partition(r: Sequence[int]) -> VertexPartition:
    return VertexPartition.from_sizes(r)


def identify(g1: Graph, u1: int, g2: Graph, u2: int) -> Graph:
    if not 0 <= u1 < g1.order or not 0 <= u2 < g2.order:
        raise GraphError("identified vertex out of range")
    n1 = g1.order
    pos = {}
    nxt = n1
    for v in range(g2.order):
        if v == u2:
            pos[v] = u1
        else:
            pos[v] = nxt
            nxt += 1
    edges = g1.edges() + [(pos[a], pos[b]) for a, b in g2.edges()]
    return Graph.from_edges(n1 + g2.order - 1, edges)


def cycle_star(k: int, m: int) -> Graph:
    """C_{2k+3} with a pendant star of m-2k-3 leaves at one cycle vertex;
    order and size both equal m."""
    if k < 1:
        raise GraphError("need k >= 1")
    if m < 2 * k + 3:
        raise GraphError("need m >= 2k+3")
    return identify(cycle(2 * k + 3), 0, star(m - 2 * k - 3), 0)


def cycle_star_partition(k: int, m: int) -> VertexPartition:
    """Orbit partition of ``cycle_star(k, m)``: the hub, the mirror pairs of
    cycle vertices {j, 2k+3-j}, then the leaves (if any)."""
    length = 2 * k + 3
    cells = [(0,)] + [(j, length - j) for j in range(1, k + 2)]
    if m > length:
        cells.append(tuple(range(length, m)))
    return VertexPartition(tuple(cells))


def extremal_by_order(n: int, k: int) -> Graph:
    """C_{2k+3} o (n-2k-2, 1, ..., 1)."""
    if n < 2 * k + 3:
        raise GraphError("need n >= 2k+3")
    return blow_up(cycle(2 * k + 3), [n - 2 * k - 2] + [1] * (2 * k + 2))


def s_nk(n: int, k: int) -> Graph:
    """Join of a k-clique with an independent set of n-k vertices."""
    if not n > k >= 1:
        raise GraphError("need n > k >= 1")
    edges = [(i, j) for i in range(k) for j in range(i + 1, n)]
    return Graph.from_edges(n, edges)


def s_nk_plus(n: int, k: int) -> Graph:
    """S_{n,k} plus the edge (k, k+1) inside the independent set."""
    if n - k < 2:
        raise GraphError("need n-k >= 2")
    return s_nk(n, k).add_edge(k, k + 1)


# ---------------------------------------------------------------------------
# the lower-bound graph G0
# ---------------------------------------------------------------------------

def g0(n: int, k: int) -> tuple[Graph, VertexPartition]:
    """Graph on n-2k+4 vertices whose Q-quotient over its 4-cell partition is

        [[n-2k-1, n-2k-2, 1, 0],
         [2,      2,      0, 0],
         [1,      0,      2, 1],
         [0,      0,      1, 1]]

    Layout: hubs 0, 1 (V1); the independent set V2 = 2..n-2k-1, joined to both
    hubs; V3 = {a, b} with a ~ 0, b ~ 1; V4 = two pendants, one on a, one on b.
    """
    if k < 2 or n < 2 * k + 3:
        raise GraphError("need k >= 2 and n >= 2k+3")
    mid = n - 2 * k - 2
    v2 = list(range(2, 2 + mid))
    a, b = 2 + mid, 3 + mid
    pa, pb = 4 + mid, 5 + mid
    edges = [(h, v) for h in (0, 1) for v in v2]
    edges += [(0, a), (1, b), (a, pa), (b, pb)]
    g = Graph.from_edges(mid + 6, edges)
    part = VertexPartition(((0, 1), tuple(v2), (a, b), (pa, pb)))
    return g, part


def g0_embedding(n: int, k: int) -> list[int]:
    """Injective map from g0(n, k) into ``extremal_by_order(n, k)`` that sends
    edges to edges.  V2 goes onto the blown cell, the hubs onto its two cycle
    neighbours, V3 and V4 onto the next cycle vertices on either side."""
    g, _ = g0(n, k)
    mid = n - 2 * k - 2
    length = 2 * k + 3

    def cyc(j):  # cycle position j (1..2k+2) in the blow-up layout
        return mid + j - 1

    image = [cyc(1), cyc(length - 1)]
    image += list(range(mid))
    image += [cyc(2), cyc(length - 2), cyc(3), cyc(length - 3)]
    assert len(image) == g.order
    return image


# ---------------------------------------------------------------------------
# transformations
# ---------------------------------------------------------------------------

def rotate_edge(g: Graph, v: int, frm: int, to: int) -> Graph:
    """Replace the edge (frm, v) by (to, v).  Whether x_to >= x_frm holds (the
    condition under which q strictly grows) is left to the caller."""
    if not g.has_edge(frm, v):
        raise GraphError(f"edge ({frm}, {v}) absent")
    if to == v or g.has_edge(to, v):
        raise GraphError(f"cannot rotate onto ({to}, {v})")
    return g.remove_edge(frm, v).add_edge(to, v)


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace the edge uv by the path u-w-v with a new vertex w = n."""
    if not g.has_edge(u, v):
        raise GraphError(f"edge ({u}, {v}) absent")
    return g.remove_edge(u, v).add_vertex([u, v])


@dataclass(frozen=True)
class InternalPath:
    """v_1..v_k with end degrees >= 3 (or v_1 = v_k) and interior degrees 2."""

    vertices: tuple[int, ...]

    @property
    def is_cycle(self) -> bool:
        return len(self.vertices) > 2 and self.vertices[0] == self.vertices[-1]

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return list(zip(vs, vs[1:]))

    def validate(self, g: Graph) -> None:
        vs = self.vertices
        if len(vs) < 2:
            raise GraphError("internal path needs at least 2 vertices")
        for a, b in zip(vs, vs[1:]):
            if not g.has_edge(a, b):
                raise GraphError(f"({a}, {b}) is not an edge")
        if g.degree(vs[0]) < 3 or g.degree(vs[-1]) < 3:
            raise GraphError("internal path ends must have degree >= 3")
        inner = vs[1:-1]
        if any(g.degree(v) != 2 for v in inner):
            raise GraphError("internal path interior must have degree 2")
        body = vs[:-1] if self.is_cycle else vs
        if len(set(body)) != len(body):
            raise GraphError("internal path repeats a vertex")


def find_internal_paths(g: Graph) -> list[InternalPath]:
    """All maximal internal paths and internal cycles, each listed once,
    oriented so the vertex sequence is lexicographically smallest."""
    deg = g.degrees()
    found = set()
    for s in range(g.order):
        if deg[s] < 3:
            continue
        for first in g.neighbors(s):
            walk = [s, first]
            prev, cur = s, first
            while deg[cur] == 2 and cur != s:
                a, b = g.neighbors(cur)
                prev, cur = cur, (b if a == prev else a)
                walk.append(cur)
            if deg[cur] < 3:
                continue  # ran into a pendant path
            t = tuple(walk)
            found.add(min(t, t[::-1]))
    return [InternalPath(p) for p in sorted(found)]


def contract_path_to_edge(g: Graph, p: InternalPath) -> Graph:
    """Delete the interior of p and join its ends.  Remaining vertices keep
    their relative order.

    p may be any segment of an internal path: consecutive vertices adjacent,
    interior vertices of degree 2, at least one interior vertex.  The ends
    need not have degree >= 3 (shortening C_7 to C_6 inside a blow-up
    contracts a segment between two degree-2 vertices).
    """
    vs = p.vertices
    if len(vs) < 3:
        raise GraphError("path must have an interior vertex")
    if p.is_cycle:
        raise GraphError("contracting an internal cycle would create a loop")
    if len(set(vs)) != len(vs):
        raise GraphError("path repeats a vertex")
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"({a}, {b}) is not an edge")
    if any(g.degree(v) != 2 for v in vs[1:-1]):
        raise GraphError("path interior must have degree 2")
    a, b = vs[0], vs[-1]
    if g.has_edge(a, b):
        raise GraphError("ends already adjacent; contraction would create a multi-edge")
    inner = set(vs[1:-1])
    keep = [v for v in range(g.order) if v not in inner]
    h = g.induced_subgraph(keep)
    pos = {v: i for i, v in enumerate(keep)}
    return h.add_edge(pos[a], pos[b])
