"""Compare the compiled and pure-Python kernels on the hot paths.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from qextremal import _pykernels as py
from qextremal.constructions import complete_bipartite, cycle_star, extremal_by_order, star
from qextremal.graph import Graph

try:
    from qextremal import _ckernels as cy
except ImportError:
    cy = None


def _random_graphs(count, n, p, seed=0):
    rng = random.Random(seed)
    return [Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
            for _ in range(count)]


def workloads():
    rand = _random_graphs(200, 9, 0.4)
    sym = [star(12), complete_bipartite(6, 6), extremal_by_order(9, 2), cycle_star(2, 12)]
    return {
        "canonical_labeling (200 random, n=9)":
            lambda m: [m.canonical_labeling(g.order, list(g.rows)) for g in rand],
        "canonical_labeling (symmetric)":
            lambda m: [m.canonical_labeling(g.order, list(g.rows)) for g in sym],
        "odd_walk_masks (200 random, len 3)":
            lambda m: [m.odd_walk_masks(g.order, list(g.rows), 3) for g in rand],
        "power_iteration (200 random)":
            lambda m: [m.power_iteration(g.order, list(g.rows), 1e-12, 10**6) for g in rand if g.size()],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = [("python", py)] + ([("cython", cy)] if cy else [])
    print(f"{'workload':40s}" + "".join(f"{name:>12s}" for name, _ in impls) + ("     speedup" if cy else ""))
    for label, fn in workloads().items():
        times = [min(timeit.repeat(lambda: fn(m), number=1, repeat=args.repeat)) for _, m in impls]
        row = f"{label:40s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
        if cy:
            row += f"{times[0] / times[1]:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
