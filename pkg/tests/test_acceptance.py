"""Acceptance criteria 1-10, each at its stated tolerance and time budget.

Run with ``pytest tests/test_acceptance.py -v`` or directly as a script; every
criterion prints one ``criterion N: PASS|FAIL`` line.
"""

import subprocess
import sys
import time
from fractions import Fraction

import pytest

from qextremal.bounds import degree_avg_bound, edge_degree_bound, equality_case
from qextremal.constructions import blow_up, blow_up_partition, cycle, extremal_by_order, g0, g0_embedding
from qextremal.graph import is_connected
from qextremal.lemmas import suite_quotient_spectra, suite_rotation, suite_subdivision
from qextremal.partitions import quotient
from qextremal.search import (certify_theorem_1_3, certify_theorem_1_4, class_graphs_by_order,
                              classical_edge_bounds)
from qextremal.spectral import X, char_poly, q_index, reference_f, reference_g


def _grid():
    for k in (2, 3, 4):
        for n in range(2 * k + 3, 2 * k + 10):
            yield n, k


def criterion_1():
    for n, k in _grid():
        g, p = g0(n, k)
        b = quotient(g, p)
        a = n - 2 * k
        expected = [[a - 1, a - 2, 1, 0], [2, 2, 0, 0], [1, 0, 2, 1], [0, 0, 1, 1]]
        if not b.equitable or b.tolist() != [[Fraction(x) for x in r] for r in expected]:
            return False, f"quotient of g0({n},{k}) is {b.tolist()}"
        if char_poly(b.as_int_matrix()).tolist() != reference_g(n, k).tolist():
            return False, f"char_poly mismatch at ({n},{k})"
        big, image = extremal_by_order(n, k), g0_embedding(n, k)
        if len(set(image)) != g.order or g.size() >= big.size() or \
                not all(big.has_edge(image[u], image[v]) for u, v in g.edges()):
            return False, f"g0({n},{k}) is not a proper subgraph of the blow-up"
    return True, "21 (n,k) pairs: exact quotient, quartic, proper embedding"


def criterion_2():
    worst = None
    for n, k in _grid():
        q = q_index(blow_up(cycle(2 * k + 3), [n - 2 * k - 2] + [1] * (2 * k + 2)))
        margin = q - float(n - 2 * k + 1 - Fraction(3, 2 * (n - 2 * k + 4)))
        worst = margin if worst is None else min(worst, margin)
        if not margin > 1e-9:
            return False, f"margin {margin:.3e} at ({n},{k})"
    return True, f"smallest margin {worst:.6g}"


def criterion_3():
    k = 2
    count = 0
    for n in range(8, 13):
        total = n - 2 * k - 1
        for n1 in range(1, total):
            n2 = total - n1
            r = (n1, n2, 1, 1, 1, 1)
            b = quotient(blow_up(cycle(6), r), blow_up_partition(r))
            f = reference_f(n1, n2, k, n)
            if not b.equitable or char_poly(b.as_int_matrix()) != f:
                return False, f"sextic mismatch at {r}, n={n}"
            if n2 >= 2:
                diff = f - reference_f(n1 + 1, n2 - 1, k, n)
                c = 2 * n1 + 2 * k + 2 - n
                if diff != c * X * (X - 3) * (X**2 - (n - 2 * k + 2) * X + (n - 2 * k + 3)):
                    return False, f"difference identity fails at n1={n1}, n={n}"
            count += 1
    return True, f"{count} (n1,n2,n) triples"


def criterion_4():
    rep = suite_quotient_spectra(1e-8)
    return rep.passed, f"{rep.checked} constructions, {len(rep.counterexamples)} mismatches"


def criterion_5():
    checked = 0
    for n in range(2, 8):
        for g in class_graphs_by_order(n, 0):
            if not is_connected(g):
                continue
            checked += 1
            q = q_index(g)
            eq = equality_case(g)
            for b in (edge_degree_bound(g), degree_avg_bound(g)):
                d = float(b) - q
                if d < -1e-8:
                    return False, f"bound violated by {g!r}"
                if (abs(d) <= 1e-8) != eq:
                    return False, f"equality characterization fails for {g!r}"
    return True, f"{checked} connected graphs of order <= 7"


def criterion_6():
    rot = suite_rotation(200, 9)
    sub = suite_subdivision(200, 9)
    ok = rot.passed and sub.passed
    return ok, (f"rotation {rot.checked} checked / {len(rot.counterexamples)} bad / {rot.inconclusive} inconclusive; "
                f"subdivision {sub.checked} / {len(sub.counterexamples)} / {sub.inconclusive}")


def criterion_7():
    t0 = time.perf_counter()
    bad = [n for n in (7, 8) if not certify_theorem_1_3(n, 2, threads=1).passed]
    t_mandatory = time.perf_counter() - t0
    t0 = time.perf_counter()
    optional = certify_theorem_1_3(9, 2, threads=1).passed
    t_optional = time.perf_counter() - t0
    if bad or t_mandatory >= 120:
        return False, f"n=7,8: failed at {bad}, {t_mandatory:.2f}s (budget 120s)"
    if not optional or t_optional >= 900:
        return False, f"optional n=9: passed={optional}, {t_optional:.2f}s (budget 900s)"
    return True, f"n=7,8 in {t_mandatory:.2f}s; optional n=9 in {t_optional:.2f}s"


def criterion_8():
    cases = [(m, 1) for m in range(5, 11)] + [(m, 2) for m in range(7, 13)]
    bad = [(m, k) for m, k in cases if not certify_theorem_1_4(m, k, threads=1).passed]
    return not bad, f"{len(cases)} (m,k) pairs certified" if not bad else f"failed at {bad}"


def criterion_9():
    bad = [n for n in range(4, 9) if not classical_edge_bounds(n).passed]
    return not bad, "n=4..8" if not bad else f"failed at n={bad}"


def _cli(args):
    return subprocess.run([sys.executable, "-m", "qextremal.cli", *args],
                          capture_output=True, check=False).stdout


def criterion_10():
    commands = [["certify", "--theorem", "1.3", "--n", str(n), "--k", "2"] for n in (7, 8, 9)]
    commands += [["certify", "--theorem", "1.4", "--m", str(m), "--k", "1"] for m in range(5, 11)]
    commands += [["certify", "--theorem", "1.4", "--m", str(m), "--k", "2"] for m in range(7, 13)]
    commands += [["search", "--order", str(n), "--k", "2"] for n in (7, 8, 9)]
    commands += [["search", "--size", str(m), "--k", "1"] for m in (8, 10)]
    for cmd in commands:
        a = _cli(cmd + ["--threads", "1"])
        b = _cli(cmd + ["--threads", "3"])
        if not a or a != b:
            return False, f"output differs for {' '.join(cmd)}"
    return True, f"{len(commands)} commands byte-identical across thread counts"


# (criterion, runtime budget in seconds)
CRITERIA = [
    (criterion_1, 1), (criterion_2, 5), (criterion_3, 1), (criterion_4, 5),
    (criterion_5, 600), (criterion_6, 60), (criterion_7, None), (criterion_8, 600),
    (criterion_9, 300), (criterion_10, None),
]


def evaluate(i):
    fn, budget = CRITERIA[i - 1]
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    if budget is not None and elapsed >= budget:
        ok, detail = False, f"{detail}; took {elapsed:.2f}s, budget {budget}s"
    line = f"criterion {i}: {'PASS' if ok else 'FAIL'} ({detail}; {elapsed:.2f}s)"
    return ok, line


@pytest.mark.parametrize("i", range(1, 11))
def test_criterion(i, capsys):
    ok, line = evaluate(i)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(i) for i in range(1, 11)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
