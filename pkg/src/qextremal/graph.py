"""Simple undirected graphs on at most 64 vertices, stored as bitset rows.

Vertices are the dense indices ``0..n-1``.  A :class:`Graph` is an immutable
value: every transformation returns a new graph.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

MAX_ORDER = 64


class GraphError(ValueError):
    """Invalid vertex index, vertex set or graph encoding."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("_n", "_rows")

    def __init__(self, order: int, rows: Sequence[int] | None = None):
        if not 0 <= order <= MAX_ORDER:
            raise GraphError(f"order must be in 0..{MAX_ORDER}, got {order}")
        rows = tuple(rows) if rows is not None else (0,) * order
        if len(rows) != order:
            raise GraphError("one adjacency row per vertex required")
        full = (1 << order) - 1
        for v, r in enumerate(rows):
            if r & ~full or r < 0:
                raise GraphError(f"row {v} references a vertex outside 0..{order - 1}")
            if (r >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in _bits(r):
                if not (rows[u] >> v) & 1:
                    raise GraphError(f"adjacency not symmetric at ({v}, {u})")
        self._n = order
        self._rows = rows

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, rows)

    # -- basic queries -----------------------------------------------------

    @property
    def order(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def _check(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise GraphError(f"vertex {v} out of range for order {self._n}")

    def size(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def degree(self, v: int) -> int:
        self._check(v)
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return list(_bits(self._rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool((self._rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in _bits(self._rows[u] >> u << u) if v > u]

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in range(u + 1, self._n)
                if not (self._rows[u] >> v) & 1]

    # -- derived graphs ----------------------------------------------------

    def add_edge(self, u: int, v: int) -> Graph:
        self._check(u)
        self._check(v)
        if u == v or self.has_edge(u, v):
            raise GraphError(f"cannot add edge ({u}, {v})")
        rows = list(self._rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self._n, rows)

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"no edge ({u}, {v})")
        rows = list(self._rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self._n, rows)

    def add_vertex(self, neighbors: Iterable[int] = ()) -> Graph:
        """Append vertex ``n`` adjacent to ``neighbors``."""
        n = self._n
        rows = list(self._rows) + [0]
        for u in neighbors:
            self._check(u)
            rows[u] |= 1 << n
            rows[n] |= 1 << u
        return Graph(n + 1, rows)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``perm[i]`` becomes vertex ``i``."""
        if sorted(perm) != list(range(self._n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        pos = [0] * self._n
        for i, v in enumerate(perm):
            pos[v] = i
        rows = []
        for i in range(self._n):
            r = 0
            for u in _bits(self._rows[perm[i]]):
                r |= 1 << pos[u]
            rows.append(r)
        return Graph(self._n, rows)

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph; the kept vertices are renumbered in increasing order."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check(v)
        pos = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            r = 0
            for u in _bits(self._rows[v]):
                if u in pos:
                    r |= 1 << pos[u]
            rows.append(r)
        return Graph(len(keep), rows)

    def disjoint_union(self, other: Graph) -> Graph:
        """``self`` on 0..n-1 followed by ``other`` shifted by n."""
        n = self._n
        return Graph(n + other._n, list(self._rows) + [r << n for r in other._rows])

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        left = (1 << self._n) - 1
        out = []
        while left:
            start = (left & -left).bit_length() - 1
            comp = frontier = 1 << start
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self._rows[v]
                frontier = nxt & ~comp
                comp |= frontier
            out.append(list(_bits(comp)))
            left &= ~comp
        return out

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self):
        return hash((self._n, self._rows))

    def __repr__(self):
        return f"Graph(order={self._n}, edges={self.edges()})"


# ---------------------------------------------------------------------------
# module-level queries
# ---------------------------------------------------------------------------

def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def max_degree(g: Graph) -> int:
    if g.order < 1:
        raise GraphError("max_degree of the empty graph")
    return max(g.degrees())


def _vertex_mask(g: Graph, vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < g.order:
            raise GraphError(f"vertex {v} out of range for order {g.order}")
        if (mask >> v) & 1:
            raise GraphError(f"vertex {v} repeated in vertex set")
        mask |= 1 << v
    return mask


def edges_between(g: Graph, s: Iterable[int], t: Iterable[int]) -> int:
    """Number of edges with one end in ``s`` and the other in ``t``."""
    sm, tm = _vertex_mask(g, s), _vertex_mask(g, t)
    if sm & tm:
        raise GraphError("vertex sets overlap")
    return sum((g.rows[v] & tm).bit_count() for v in _bits(sm))


def edges_inside(g: Graph, s: Iterable[int]) -> int:
    sm = _vertex_mask(g, s)
    return sum((g.rows[v] & sm).bit_count() for v in _bits(sm)) // 2


def is_connected(g: Graph) -> bool:
    """True iff g has exactly one component.  The empty graph is not connected."""
    return len(g.components()) == 1


# ---------------------------------------------------------------------------
# graph6 and edge-list text formats
# ---------------------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    """Encode in graph6 (short form, n <= 62; no ``>>graph6<<`` header)."""
    n = g.order
    if n > 62:
        raise GraphError("graph6 long form (n > 62) is not supported")
    bits = []
    for v in range(1, n):
        r = g.rows[v]
        for u in range(v):
            bits.append((r >> u) & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(63 + val))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise GraphError(f"invalid graph6 character in {text!r}")
    n = ord(s[0]) - 63
    if n > 62:
        raise GraphError("graph6 long form (n > 62) is not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - 1 != need:
        raise GraphError(f"graph6 string has {len(s) - 1} data bytes, expected {need}")
    bits = []
    for c in s[1:]:
        val = ord(c) - 63
        bits.extend((val >> (5 - i)) & 1 for i in range(6))
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, rows)


def to_edge_list(g: Graph) -> str:
    """``n <order>`` header line followed by one ``u v`` line per edge."""
    lines = [f"n {g.order}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list(text: str, order: int | None = None) -> Graph:
    """Parse ``u v`` lines.  An optional ``n <order>`` line fixes the order,
    otherwise it is one more than the largest vertex mentioned.  ``#`` starts
    a comment."""
    edges = []
    n = order
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphError(f"line {lineno}: non-integer vertex in {raw!r}") from None
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges)


def parse_graph(text: str) -> Graph:
    """Accept either a graph6 line or edge-list text."""
    s = text.strip()
    if "\n" not in s and " " not in s:
        return from_graph6(s)
    return from_edge_list(text)
