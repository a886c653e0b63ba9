"""Exhaustive search over graphs without short odd cycles.

Graphs are generated up to isomorphism by vertex extension.  The class
"no odd cycle of length <= 2k+1" is closed under deleting vertices, so every
member on n vertices arises from a member on n-1 vertices plus one vertex.
A new vertex w with neighbourhood S stays in the class iff no two vertices of
S are joined by an odd walk of length <= 2k-1 (such a walk closes through w
to an odd closed walk of length <= 2k+1).  Isomorphs are removed with the
canonical labeling kernel after each level.

For the size-constrained search only connected graphs are generated (each is
its predecessor plus a vertex that is not a cut vertex); disconnected
candidates are covered by composing connected components.
"""

from __future__ import annotations

import math
import os
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from collections.abc import Iterator

from . import kernels
from .constructions import cycle_star, disjoint_union, extremal_by_order
from .graph import Graph, GraphError, to_graph6
from .odd_cycle import is_bipartite, odd_girth
from .spectral import q_index

SCHEMA = 1
TIE_TOL = 1e-8
DEFAULT_ORDER_CAP = 9
DEFAULT_SIZE_CAP = 12
ISO_CAP = 16


class SearchCapError(ValueError):
    pass


# ---------------------------------------------------------------------------
# canonical forms and isomorphism
# ---------------------------------------------------------------------------

def canonical_code(g: Graph) -> tuple[int, ...]:
    return kernels.canonical_labeling(g.order, list(g.rows))[1]


def canonical_form(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return Graph(g.order, canonical_code(g))


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_form(g))


def is_isomorphic(g1: Graph, g2: Graph, cap: int = ISO_CAP) -> bool:
    if g1.order > cap or g2.order > cap:
        raise SearchCapError(f"isomorphism test limited to order <= {cap}")
    if g1.order != g2.order or g1.size() != g2.size():
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_code(g1) == canonical_code(g2)


# ---------------------------------------------------------------------------
# generation
# ---------------------------------------------------------------------------

def _independent_subsets(n: int, conflict: list[int], max_size: int) -> Iterator[int]:
    """Bitmasks S of 0..n-1 with no two members in conflict, |S| <= max_size."""
    def rec(start, chosen, banned, size):
        yield chosen
        if size == max_size:
            return
        for v in range(start, n):
            if not (banned >> v) & 1:
                yield from rec(v + 1, chosen | (1 << v), banned | conflict[v], size + 1)
    yield from rec(0, 0, 0, 0)


def _extend_chunk(args):
    """Children of a batch of parents, as {canonical code: edge count}."""
    parents, k, max_edges, connected = args
    out = {}
    for n, rows in parents:
        edges = sum(r.bit_count() for r in rows) // 2
        budget = n if max_edges is None else min(n, max_edges - edges)
        if budget < (1 if connected else 0):
            continue
        if k >= 1:
            masks = kernels.odd_walk_masks(n, rows, 2 * k - 1)
            conflict = [masks[v] & ~(1 << v) for v in range(n)]
        else:
            conflict = [0] * n
        bit = 1 << n
        for s in _independent_subsets(n, conflict, budget):
            if connected and not s:
                continue
            child = [r | bit if (s >> v) & 1 else r for v, r in enumerate(rows)]
            child.append(s)
            code = kernels.canonical_labeling(n + 1, child)[1]
            if code not in out:
                out[code] = edges + s.bit_count()
    return out


def _map(fn, tasks, threads):
    if threads <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, tasks))


def _next_level(level: list[tuple[int, ...]], k: int, max_edges, connected, threads) -> list[tuple[int, ...]]:
    if not level:
        return []
    n = len(level[0])
    nchunks = max(1, min(len(level), threads * 4 if threads > 1 else 1))
    size = -(-len(level) // nchunks)
    tasks = [([(n, list(code)) for code in level[i:i + size]], k, max_edges, connected)
             for i in range(0, len(level), size)]
    merged = {}
    for part in _map(_extend_chunk, tasks, threads):
        merged.update(part)
    return sorted(merged)


def class_graphs_by_order(n: int, k: int, threads: int = 1) -> list[Graph]:
    """Every graph on n vertices with no odd cycle of length <= 2k+1, one per
    isomorphism class, in canonical form and sorted by canonical code.
    ``k = 0`` imposes no restriction (all graphs)."""
    if n < 1:
        raise ValueError("order must be positive")
    level = [(0,)]
    for _ in range(1, n):
        level = _next_level(level, k, None, False, threads)
    return [Graph(n, code) for code in level]


def connected_class_graphs_by_size(max_m: int, k: int, threads: int = 1) -> dict[int, list[Graph]]:
    """Connected graphs with 1..max_m edges and no odd cycle of length
    <= 2k+1, grouped by edge count, canonical and sorted."""
    by_size = {j: [] for j in range(1, max_m + 1)}
    level = [(0,)]
    for n in range(2, max_m + 2):
        level = _next_level(level, k, max_m, True, threads)
        for code in level:
            j = sum(r.bit_count() for r in code) // 2
            by_size[j].append(Graph(n, code))
    return by_size


def _check_cap(value: int, cap: int, default: int, what: str) -> None:
    if value > cap:
        raise SearchCapError(f"{what} {value} exceeds cap {cap}")
    if value > default:
        warnings.warn(f"{what} {value} is above the default cap {default}; this may be slow",
                      RuntimeWarning, stacklevel=3)


def enumerate_admissible_by_order(n: int, k: int, cap: int = DEFAULT_ORDER_CAP,
                                  threads: int = 1) -> Iterator[Graph]:
    """Admissible graphs of order n (non-bipartite, odd girth >= 2k+3), one
    per isomorphism class."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_cap(n, cap, DEFAULT_ORDER_CAP, "order")
    for g in class_graphs_by_order(n, k, threads):
        if not is_bipartite(g):
            yield g


def _compositions(m: int, parts: dict[int, list[Graph]], need_odd: bool,
                  min_key=(1, 0), have_odd=False, ncomp=0) -> Iterator[list[Graph]]:
    """Multisets of connected components with m edges in total, at least two
    components, chosen in non-decreasing (edges, index) order."""
    if m == 0:
        if ncomp >= 2 and (have_odd or not need_odd):
            yield []
        return
    j0, i0 = min_key
    for j in range(j0, m + 1):
        graphs = parts.get(j, [])
        for i in range(i0 if j == j0 else 0, len(graphs)):
            c = graphs[i]
            odd = not is_bipartite(c)
            for rest in _compositions(m - j, parts, need_odd, (j, i), have_odd or odd, ncomp + 1):
                yield [c] + rest


def enumerate_admissible_by_size(m: int, k: int, cap: int = DEFAULT_SIZE_CAP,
                                 threads: int = 1) -> Iterator[Graph]:
    """Admissible graphs with exactly m edges and no isolated vertices, one
    per isomorphism class: connected ones first, then disjoint unions."""
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_cap(m, cap, DEFAULT_SIZE_CAP, "size")
    by_size = connected_class_graphs_by_size(m, k, threads)
    for g in by_size[m]:
        if not is_bipartite(g):
            yield g
    for comps in _compositions(m, by_size, True):
        yield canonical_form(disjoint_union(*comps))


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def _fmt(x: float) -> float:
    return float(f"{x:.12g}")


@dataclass
class SearchReport:
    mode: str                   # "order" or "size"
    param: int                  # n or m
    k: int
    max_q: float
    maximizers: list[Graph]
    count_enumerated: int
    count_admissible: int
    tolerance_used: float = TIE_TOL
    runtime: float = 0.0
    extra: dict = field(default_factory=dict)

    def to_dict(self, include_runtime: bool = False) -> dict:
        d = {
            "schema": SCHEMA,
            "mode": self.mode,
            ("n" if self.mode == "order" else "m"): self.param,
            "k": self.k,
            "max_q": _fmt(self.max_q),
            "maximizers": sorted(to_graph6(g) for g in self.maximizers),
            "count_enumerated": self.count_enumerated,
            "count_admissible": self.count_admissible,
            "tolerance_used": self.tolerance_used,
        }
        d.update(self.extra)
        if include_runtime:
            d["runtime"] = round(self.runtime, 3)
        return d


def _maximizers(scored: list[tuple[float, Graph]], tol: float):
    if not scored:
        return -math.inf, []
    best = max(q for q, _ in scored)
    return best, [g for q, g in scored if q >= best - tol]


def max_q_by_order(n: int, k: int, cap: int = DEFAULT_ORDER_CAP, threads: int = 1,
                   tol: float = TIE_TOL) -> SearchReport:
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_cap(n, cap, DEFAULT_ORDER_CAP, "order")
    t0 = time.perf_counter()
    graphs = class_graphs_by_order(n, k, threads)
    scored = [(q_index(g), g) for g in graphs if not is_bipartite(g)]
    best, winners = _maximizers(scored, tol)
    return SearchReport("order", n, k, best, winners, len(graphs), len(scored), tol,
                        time.perf_counter() - t0)


def max_q_by_size(m: int, k: int, cap: int = DEFAULT_SIZE_CAP, threads: int = 1,
                  tol: float = TIE_TOL) -> SearchReport:
    """Maximum Q-index over admissible graphs with m edges and no isolated
    vertices, including disconnected ones.

    A disjoint union has the Q-index of its best component.  A component with
    j < m edges can occur in a valid union iff it is non-bipartite, or it is
    bipartite and the remaining m - j >= 2k+3 edges can carry a non-bipartite
    component.  The best disconnected value is therefore the max over those
    components; it is compared with the connected optimum.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_cap(m, cap, DEFAULT_SIZE_CAP, "size")
    t0 = time.perf_counter()
    by_size = connected_class_graphs_by_size(m, k, threads)
    best_adm: dict[int, float] = {}
    best_bip: dict[int, float] = {}
    scored_m = []
    for j, graphs in by_size.items():
        for g in graphs:
            bip = is_bipartite(g)
            if bip and j > m - (2 * k + 3):
                continue
            q = q_index(g)
            table = best_bip if bip else best_adm
            table[j] = max(table.get(j, -math.inf), q)
            if j == m and not bip:
                scored_m.append((q, g))
    best_conn, winners = _maximizers(scored_m, tol)
    disc = [best_adm[j] for j in best_adm if j < m]
    disc += [best_bip[j] for j in best_bip if j <= m - (2 * k + 3)]
    best_disc = max(disc, default=-math.inf)
    best = max(best_conn, best_disc)
    winners = [g for g in winners if q_index(g) >= best - tol]
    if best_disc >= best - tol:
        for g in enumerate_admissible_by_size(m, k, cap, threads):
            if len(g.components()) > 1 and q_index(g) >= best - tol:
                winners.append(g)
    extra = {"disconnected_best_q": _fmt(best_disc) if disc else None}
    return SearchReport("size", m, k, best, winners, len(by_size[m]), len(scored_m), tol,
                        time.perf_counter() - t0, extra)


# ---------------------------------------------------------------------------
# theorem certification
# ---------------------------------------------------------------------------

@dataclass
class CertificationReport:
    theorem: str
    passed: bool
    construction: Graph
    construction_q: float
    search: SearchReport
    reasons: list[str]

    def to_dict(self, include_runtime: bool = False) -> dict:
        return {
            "schema": SCHEMA,
            "theorem": self.theorem,
            "result": "PASS" if self.passed else "FAIL",
            "construction": to_graph6(canonical_form(self.construction)),
            "construction_q": _fmt(self.construction_q),
            "reasons": self.reasons,
            "search": self.search.to_dict(include_runtime),
        }


def _certify(theorem: str, construction: Graph, report: SearchReport, tol: float) -> CertificationReport:
    qc = q_index(construction)
    reasons = []
    if abs(qc - report.max_q) > tol:
        reasons.append(f"construction q={qc:.12g} differs from search max {report.max_q:.12g}")
    classes = {canonical_code(g) for g in report.maximizers}
    if len(classes) != 1:
        reasons.append(f"{len(classes)} non-isomorphic maximizers")
    elif canonical_code(construction) not in classes:
        reasons.append("maximizer is not isomorphic to the construction")
    return CertificationReport(theorem, not reasons, construction, qc, report, reasons)


def certify_theorem_1_3(n: int, k: int, cap: int = DEFAULT_ORDER_CAP, threads: int = 1,
                        tol: float = TIE_TOL) -> CertificationReport:
    """Fixed order: C_{2k+3} o (n-2k-2, 1, ..., 1) is the unique maximizer."""
    if k < 2 or n < 2 * k + 3:
        raise ValueError("fixed-order certification needs k >= 2 and n >= 2k+3")
    report = max_q_by_order(n, k, cap, threads, tol)
    return _certify("1.3", extremal_by_order(n, k), report, tol)


def certify_theorem_1_4(m: int, k: int, cap: int = DEFAULT_SIZE_CAP, threads: int = 1,
                        tol: float = TIE_TOL) -> CertificationReport:
    """Fixed size: C_{2k+3} with a pendant star K_{1,m-2k-3} is the unique maximizer."""
    if k < 1 or m < 2 * k + 3:
        raise ValueError("fixed-size certification needs k >= 1 and m >= 2k+3")
    report = max_q_by_size(m, k, cap, threads, tol)
    return _certify("1.4", cycle_star(k, m), report, tol)


# ---------------------------------------------------------------------------
# classical edge bounds
# ---------------------------------------------------------------------------

@dataclass
class EdgeBoundReport:
    n: int
    mantel_bound: int
    max_edges_triangle_free: int
    mantel_extremal: list[Graph]
    erdos_bound: int
    max_edges_nonbipartite: int | None
    erdos_extremal: list[Graph]
    count_triangle_free: int

    @property
    def passed(self) -> bool:
        ok = self.max_edges_triangle_free == self.mantel_bound
        if self.max_edges_nonbipartite is not None:
            ok = ok and self.max_edges_nonbipartite == self.erdos_bound
        else:
            # no non-bipartite triangle-free graph exists below order 5
            ok = ok and self.n < 5
        return ok

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "n": self.n,
            "mantel_bound": self.mantel_bound,
            "max_edges_triangle_free": self.max_edges_triangle_free,
            "mantel_extremal": sorted(to_graph6(g) for g in self.mantel_extremal),
            "erdos_bound": self.erdos_bound,
            "max_edges_nonbipartite": self.max_edges_nonbipartite,
            "erdos_extremal": sorted(to_graph6(g) for g in self.erdos_extremal),
            "count_triangle_free": self.count_triangle_free,
            "result": "PASS" if self.passed else "FAIL",
        }


def classical_edge_bounds(n: int, cap: int = 8, threads: int = 1) -> EdgeBoundReport:
    """Exhaustive check of Mantel's bound floor(n^2/4) for triangle-free graphs
    and of floor((n-1)^2/4)+1 for non-bipartite triangle-free graphs."""
    if n > cap:
        raise SearchCapError(f"order {n} exceeds cap {cap}")
    graphs = class_graphs_by_order(n, 1, threads)
    sizes = [g.size() for g in graphs]
    top = max(sizes)
    nonbip = [(s, g) for s, g in zip(sizes, graphs) if not is_bipartite(g)]
    top_nb = max((s for s, _ in nonbip), default=None)
    return EdgeBoundReport(
        n=n,
        mantel_bound=n * n // 4,
        max_edges_triangle_free=top,
        mantel_extremal=[g for s, g in zip(sizes, graphs) if s == top],
        erdos_bound=(n - 1) ** 2 // 4 + 1,
        max_edges_nonbipartite=top_nb,
        erdos_extremal=[g for s, g in nonbip if s == top_nb],
        count_triangle_free=len(graphs),
    )


def default_threads() -> int:
    return os.cpu_count() or 1
