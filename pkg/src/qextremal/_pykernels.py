"""Pure-Python implementations of the hot kernels.

Every function here has a twin in ``_ckernels.pyx`` with the same signature
and the same output (bit-for-bit for the combinatorial kernels).  Graphs are
passed as ``(n, rows)`` where ``rows[v]`` is the neighbourhood bitmask of v.
"""

import numpy as np

BACKEND = "python"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _neighbourhood(rows, mask):
    out = 0
    for v in _bits(mask):
        out |= rows[v]
    return out


# ---------------------------------------------------------------------------
# odd walks
# ---------------------------------------------------------------------------

def odd_walk_masks(n, rows, maxlen):
    """For each vertex a, the set of b reachable from a by a walk of odd
    length at most ``maxlen`` (as a bitmask).  ``maxlen < 1`` gives zeros."""
    out = [0] * n
    if maxlen < 1:
        return out
    top = maxlen if maxlen % 2 else maxlen - 1
    for a in range(n):
        cur = 1 << a
        for _ in range(top):
            cur = _neighbourhood(rows, cur)
            if not cur:
                break
        # a walk of length l extends to one of length l + 2 by bouncing, so
        # the walks of length exactly `top` cover all shorter odd ones
        out[a] = cur
    return out


def odd_closed_walks(n, rows):
    """Length of the shortest odd closed walk through each vertex (0 if none).

    Breadth-first search on the bipartite double cover: the distance from
    (v, even) to (v, odd)."""
    out = [0] * n
    for v in range(n):
        seen = [1 << v, 0]
        frontier = 1 << v
        parity = 0
        length = 0
        while frontier:
            length += 1
            parity ^= 1
            nxt = _neighbourhood(rows, frontier) & ~seen[parity]
            if parity and (nxt >> v) & 1:
                out[v] = length
                break
            seen[parity] |= nxt
            frontier = nxt
    return out


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------

def _refine(n, rows, colors):
    """Colour refinement to the coarsest equitable colouring finer than
    ``colors``.  Colours are renumbered by sorted signature, which keeps the
    result independent of the vertex labels."""
    ncol = len(set(colors))
    while True:
        cells = [0] * ncol
        for v in range(n):
            cells[colors[v]] |= 1 << v
        sigs = []
        for v in range(n):
            r = rows[v]
            sigs.append((colors[v], tuple(bin(r & c).count("1") for c in cells)))
        ranked = sorted(set(sigs))
        if len(ranked) == ncol:
            return colors
        index = {s: i for i, s in enumerate(ranked)}
        colors = [index[s] for s in sigs]
        ncol = len(ranked)


def _individualize(colors, v):
    # v moves in front of the rest of its cell; colours stay dense
    c = colors[v]
    return [x if x < c or u == v else x + 1 for u, x in enumerate(colors)]


def _target_cell(n, colors):
    """First smallest non-singleton cell, as a sorted vertex list."""
    sizes = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    best = None
    for c in sorted(sizes):
        if sizes[c] > 1 and (best is None or sizes[c] < sizes[best]):
            best = c
    if best is None:
        return None
    return [v for v in range(n) if colors[v] == best]


def _relabeled(n, rows, colors):
    perm = [0] * n
    for v in range(n):
        perm[colors[v]] = v
    code = []
    for i in range(n):
        r = rows[perm[i]]
        nr = 0
        for u in _bits(r):
            nr |= 1 << colors[u]
        code.append(nr)
    return perm, tuple(code)


def _twin_pairs(n, rows):
    """Pairs (u, w) with N(u) - w == N(w) - u; swapping them is an automorphism."""
    pairs = []
    for u in range(n):
        for w in range(u + 1, n):
            if rows[u] & ~(1 << w) == rows[w] & ~(1 << u):
                pairs.append((u, w))
    return pairs


def _orbit_roots(n, generators, fixed, twins):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        a, b = find(a), find(b)
        if a < b:
            parent[b] = a
        elif b < a:
            parent[a] = b

    for u, w in twins:
        union(u, w)
    for g in generators:
        if all(g[p] == p for p in fixed):
            for v in range(n):
                union(v, g[v])
    return [find(v) for v in range(n)]


def canonical_labeling(n, rows):
    """Canonical labeling by individualization-refinement.

    Returns ``(perm, code)``: ``perm[i]`` is the original vertex placed at
    position i and ``code`` the tuple of relabeled row bitmasks, which is the
    lexicographic maximum over the leaves of the search tree.  Two graphs are
    isomorphic iff their codes are equal.  Automorphisms found when two leaves
    give the same code, and transpositions of twin vertices, prune siblings in the same
    orbit.
    """
    if n == 0:
        return [], ()
    state = {"best": None, "best_perm": None, "first": None, "first_perm": None}
    generators = []
    twins = _twin_pairs(n, rows)

    def leaf(colors):
        perm, code = _relabeled(n, rows, colors)
        if state["first"] is None:
            state["first"], state["first_perm"] = code, perm
            state["best"], state["best_perm"] = code, perm
            return
        for ref, ref_perm in ((state["first"], state["first_perm"]),
                              (state["best"], state["best_perm"])):
            if code == ref:
                # perm[i] and ref_perm[i] play the same role
                aut = [0] * n
                for i in range(n):
                    aut[perm[i]] = ref_perm[i]
                generators.append(aut)
                return
        if code > state["best"]:
            state["best"], state["best_perm"] = code, perm

    def search(colors, prefix):
        cell = _target_cell(n, colors)
        if cell is None:
            leaf(colors)
            return
        explored = []
        for v in cell:
            if explored:
                roots = _orbit_roots(n, generators, prefix, twins)
                rv = roots[v]
                if any(roots[u] == rv for u in explored):
                    continue
            explored.append(v)
            search(_refine(n, rows, _individualize(colors, v)), prefix + [v])

    search(_refine(n, rows, [0] * n), [])
    return state["best_perm"], state["best"]


# ---------------------------------------------------------------------------
# power iteration
# ---------------------------------------------------------------------------

def power_iteration(n, rows, tol, maxiter):
    """Dominant eigenpair of Q = D + A from the all-ones start vector.

    Returns ``(value, vector, iterations, converged)``; the vector has unit
    Euclidean norm and ``value`` is its Rayleigh quotient.  Convergence is
    declared when ``max|Qx - value*x| <= tol * (1 + value)``.
    """
    q = np.zeros((n, n))
    for v in range(n):
        for u in _bits(rows[v]):
            q[v, u] = 1.0
        q[v, v] = bin(rows[v]).count("1")
    x = np.ones(n) / np.sqrt(n)
    lam = 0.0
    for it in range(1, maxiter + 1):
        y = q @ x
        lam = float(x @ y)
        res = float(np.max(np.abs(y - lam * x)))
        if res <= tol * (1.0 + lam):
            return lam, x.tolist(), it, True
        norm = float(np.linalg.norm(y))
        if norm == 0.0:
            return 0.0, x.tolist(), it, True
        x = y / norm
    return lam, x.tolist(), maxiter, False
