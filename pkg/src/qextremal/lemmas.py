"""Property suites for the spectral facts the extremal results rest on.

Each suite returns a :class:`SuiteReport`; ``run_suite`` dispatches by name.

* ``2.1`` equitable quotients share the Q-index (all documented partitions)
* ``2.2`` edge rotation toward a not-smaller Perron entry raises q
* ``2.3`` subdividing an internal-path edge lowers q
* ``2.4`` / ``2.5`` degree bounds and their equality cases, exhaustively
* ``3.1`` the lower-bound graph g0: quotient, quartic, embedding, bound
* ``3.3`` the sextic f and its difference identity
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .bounds import degree_avg_bound, edge_degree_bound, equality_case
from .constructions import (blow_up, blow_up_partition, complete_bipartite, cycle,
                            cycle_star, cycle_star_partition, extremal_by_order,
                            find_internal_paths, g0, g0_embedding, rotate_edge,
                            subdivide_edge)
from .graph import Graph, is_connected
from .partitions import QUOTIENT_TOL, quotient, verify_quotient_eigenvalue
from .search import class_graphs_by_order
from .spectral import (char_poly, largest_real_root, perron_vector, q_index, reference_f,
                       reference_f_difference, reference_g)

GAP = 1e-9
EQ_TOL = 1e-8
REVIEW_TOL = 1e-6


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)
    inconclusive: int = 0
    review: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    max_inconclusive_rate: float = 0.01

    @property
    def passed(self) -> bool:
        if self.counterexamples or self.checked == 0:
            return False
        return self.inconclusive < self.max_inconclusive_rate * self.checked

    def fail(self, msg: str) -> None:
        self.counterexamples.append(msg)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "suite": self.suite,
            "result": "PASS" if self.passed else "FAIL",
            "checked": self.checked,
            "counterexamples": self.counterexamples,
            "inconclusive": self.inconclusive,
            "flagged_for_review": self.review,
            "notes": self.notes,
        }


def _random_connected(rng: random.Random, min_order: int, max_order: int) -> Graph:
    n = rng.randint(min_order, max_order)
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    extra = rng.randint(0, n)
    for _ in range(extra):
        u, v = sorted(rng.sample(range(n), 2))
        edges.add((u, v))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------

def _documented_partitions():
    for k in (2, 3, 4):
        for n in range(2 * k + 3, 2 * k + 10):
            yield f"g0({n},{k})", *g0(n, k)
            r = [n - 2 * k - 2] + [1] * (2 * k + 2)
            yield f"blow_up(C{2 * k + 3},{tuple(r)})", blow_up(cycle(2 * k + 3), r), blow_up_partition(r)
    for k in (1, 2, 3):
        for m in range(2 * k + 3, 2 * k + 10):
            yield f"cycle_star({k},{m})", cycle_star(k, m), cycle_star_partition(k, m)
    for n1 in range(1, 6):
        for n2 in range(1, 6):
            r = (n1, n2, 1, 1, 1, 1)
            yield f"blow_up(C6,{r})", blow_up(cycle(6), r), blow_up_partition(r)
    for a, b in ((1, 3), (2, 3), (3, 5)):
        yield f"K{a},{b}", complete_bipartite(a, b), blow_up_partition((a, b))


def suite_quotient_spectra(tol: float = QUOTIENT_TOL) -> SuiteReport:
    rep = SuiteReport("2.1")
    for name, g, p in _documented_partitions():
        rep.checked += 1
        r = verify_quotient_eigenvalue(g, p, tol)
        if not r.passed:
            rep.fail(f"{name}: q={r.q_index!r} root={r.quotient_root!r}")
    return rep


def suite_rotation(instances: int = 200, max_order: int = 9, seed: int = 1) -> SuiteReport:
    """Replace uv by wv where w is not adjacent to v and x_w >= x_u."""
    rng = random.Random(seed)
    rep = SuiteReport("2.2")
    while rep.checked < instances:
        g = _random_connected(rng, 4, max_order)
        x = perron_vector(g).entries
        u, v = rng.choice(g.edges())
        if rng.random() < 0.5:
            u, v = v, u
        cands = [w for w in range(g.order) if w not in (u, v) and not g.has_edge(w, v)
                 and x[w] >= x[u]]
        if not cands:
            continue
        w = rng.choice(cands)
        h = rotate_edge(g, v, u, w)
        gap = q_index(h) - q_index(g)
        rep.checked += 1
        if gap < -GAP:
            rep.fail(f"{g!r}: rotate ({u},{v})->({w},{v}) gap {gap:.3e}")
        elif gap <= GAP:
            rep.inconclusive += 1
    return rep


def suite_subdivision(instances: int = 200, max_order: int = 9, seed: int = 2) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("2.3")
    while rep.checked < instances:
        g = _random_connected(rng, 4, max_order)
        paths = find_internal_paths(g)
        if not paths:
            continue
        u, v = rng.choice(rng.choice(paths).edges())
        gap = q_index(g) - q_index(subdivide_edge(g, u, v))
        rep.checked += 1
        if gap < -GAP:
            rep.fail(f"{g!r}: subdivide ({u},{v}) gap {gap:.3e}")
        elif gap <= GAP:
            rep.inconclusive += 1
    return rep


def _bound_suite(name: str, bound, max_order: int) -> SuiteReport:
    rep = SuiteReport(name)
    for n in range(2, max_order + 1):
        for g in class_graphs_by_order(n, 0):
            if not is_connected(g):
                continue
            rep.checked += 1
            q = q_index(g)
            b = float(bound(g))
            diff = b - q
            if diff < -EQ_TOL:
                rep.fail(f"{g!r}: q={q!r} exceeds bound {b}")
                continue
            tight = abs(diff) <= EQ_TOL
            if tight != equality_case(g):
                rep.fail(f"{g!r}: equality {tight} but regular/semi-regular {equality_case(g)}")
            elif EQ_TOL < abs(diff) < REVIEW_TOL:
                rep.review.append(f"{g!r}: bound gap {diff:.3e}")
    return rep


def suite_edge_degree_bound(max_order: int = 7) -> SuiteReport:
    return _bound_suite("2.4", edge_degree_bound, max_order)


def suite_degree_avg_bound(max_order: int = 7) -> SuiteReport:
    return _bound_suite("2.5", degree_avg_bound, max_order)


def lower_bound_target(n: int, k: int) -> Fraction:
    """n - 2k + 1 - 3 / (2(n - 2k + 4))."""
    return n - 2 * k + 1 - Fraction(3, 2 * (n - 2 * k + 4))


def g0_quotient_expected(n: int, k: int) -> list[list[int]]:
    a = n - 2 * k
    return [[a - 1, a - 2, 1, 0], [2, 2, 0, 0], [1, 0, 2, 1], [0, 0, 1, 1]]


def suite_g0(ks=(2, 3, 4), span: int = 7) -> SuiteReport:
    rep = SuiteReport("3.1")
    for k in ks:
        for n in range(2 * k + 3, 2 * k + 3 + span):
            rep.checked += 1
            g, p = g0(n, k)
            b = quotient(g, p)
            tag = f"(n={n}, k={k})"
            if not b.equitable or b.tolist() != g0_quotient_expected(n, k):
                rep.fail(f"{tag}: quotient {b.tolist()}")
                continue
            if char_poly(b.as_int_matrix()) != reference_g(n, k):
                rep.fail(f"{tag}: characteristic polynomial differs from the quartic")
            big = extremal_by_order(n, k)
            image = g0_embedding(n, k)
            if len(set(image)) != g.order or not all(big.has_edge(image[u], image[v]) for u, v in g.edges()):
                rep.fail(f"{tag}: g0 does not embed in the blow-up")
            elif g.size() >= big.size():
                rep.fail(f"{tag}: embedding is not proper")
            root = largest_real_root(reference_g(n, k))
            if abs(root - q_index(g)) > QUOTIENT_TOL:
                rep.fail(f"{tag}: q(g0)={q_index(g)!r} vs root {root!r}")
            margin = q_index(big) - float(lower_bound_target(n, k))
            if margin <= GAP:
                rep.fail(f"{tag}: blow-up q margin {margin:.3e} over the lower bound")
            rep.notes.append(f"{tag} g(x) = {reference_g(n, k)}; margin {margin:.6g}")
    return rep


def suite_sextic(k: int = 2, orders=range(8, 13)) -> SuiteReport:
    rep = SuiteReport("3.3")
    for n in orders:
        total = n - 2 * k - 1
        for n1 in range(1, total):
            n2 = total - n1
            rep.checked += 1
            tag = f"(n1={n1}, n2={n2}, n={n})"
            r = (n1, n2, 1, 1, 1, 1)
            b = quotient(blow_up(cycle(6), r), blow_up_partition(r))
            if not b.equitable:
                rep.fail(f"{tag}: partition not equitable")
                continue
            f = reference_f(n1, n2, k, n)
            if char_poly(b.as_int_matrix()) != f:
                rep.fail(f"{tag}: sextic differs from the quotient's characteristic polynomial")
            if n2 >= 2:
                diff = f - reference_f(n1 + 1, n2 - 1, k, n)
                expected = reference_f_difference(n1, k, n)
                if diff != expected:
                    rep.fail(f"{tag}: difference {diff} != {expected}")
                else:
                    c = 2 * n1 + 2 * k + 2 - n
                    rep.notes.append(f"{tag} f(n1,n2,x) - f(n1+1,n2-1,x) = "
                                     f"{c}*x(x-3)(x^2-{n - 2 * k + 2}x+{n - 2 * k + 3}) = {diff}")
    return rep


SUITES = {
    "2.1": suite_quotient_spectra,
    "2.2": suite_rotation,
    "2.3": suite_subdivision,
    "2.4": suite_edge_degree_bound,
    "2.5": suite_degree_avg_bound,
    "3.1": suite_g0,
    "3.3": suite_sextic,
}


def run_suite(name: str) -> SuiteReport:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn()
