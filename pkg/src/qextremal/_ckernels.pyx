# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same contracts as ``_pykernels``.

Graphs arrive as ``(n, rows)`` with ``rows[v]`` the neighbourhood bitmask of
v.  Orders up to 64 fit in one machine word per row.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy
from libc.math cimport sqrt, fabs

BACKEND = "cython"

cdef enum:
    MAXN = 64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef int load_rows(int n, rows, uint64_t* out) except -1:
    if n < 0 or n > MAXN:
        raise ValueError("order must be in 0..64")
    cdef int v
    for v in range(n):
        out[v] = <uint64_t>rows[v]
    return 0


cdef inline uint64_t neighbourhood(const uint64_t* rows, uint64_t mask) nogil:
    cdef uint64_t out = 0
    cdef int v
    while mask:
        v = __builtin_ctzll(mask)
        out |= rows[v]
        mask &= mask - 1
    return out


# ---------------------------------------------------------------------------
# odd walks
# ---------------------------------------------------------------------------

def odd_walk_masks(int n, rows, int maxlen):
    cdef uint64_t r[MAXN]
    load_rows(n, rows, r)
    out = [0] * n
    if maxlen < 1:
        return out
    cdef int top = maxlen if maxlen % 2 else maxlen - 1
    cdef int a, i
    cdef uint64_t cur
    for a in range(n):
        cur = (<uint64_t>1) << a
        for i in range(top):
            cur = neighbourhood(r, cur)
            if not cur:
                break
        out[a] = cur
    return out


def odd_closed_walks(int n, rows):
    cdef uint64_t r[MAXN]
    load_rows(n, rows, r)
    out = [0] * n
    cdef int v, parity, length
    cdef uint64_t seen[2]
    cdef uint64_t frontier, nxt, bit
    for v in range(n):
        bit = (<uint64_t>1) << v
        seen[0] = bit
        seen[1] = 0
        frontier = bit
        parity = 0
        length = 0
        while frontier:
            length += 1
            parity ^= 1
            nxt = neighbourhood(r, frontier) & ~seen[parity]
            if parity and (nxt & bit):
                out[v] = length
                break
            seen[parity] |= nxt
            frontier = nxt
    return out


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------

cdef struct Canon:
    int n
    uint64_t rows[MAXN]
    int has_first
    uint64_t first[MAXN]
    int first_perm[MAXN]
    uint64_t best[MAXN]
    int best_perm[MAXN]
    int ngen
    int capgen
    int* gens             # ngen * n entries
    int ntwin
    int twins[MAXN * MAXN]   # flattened pairs


cdef int count_colors(int n, const int* colors) nogil:
    cdef int seen[MAXN]
    cdef int v, c = 0
    for v in range(n):
        seen[v] = 0
    for v in range(n):
        if not seen[colors[v]]:
            seen[colors[v]] = 1
            c += 1
    return c


cdef inline int sig_cmp(int a, int b, const int* colors, const int* cnt, int ncol) nogil:
    cdef int c
    if colors[a] != colors[b]:
        return -1 if colors[a] < colors[b] else 1
    for c in range(ncol):
        if cnt[a * MAXN + c] != cnt[b * MAXN + c]:
            return -1 if cnt[a * MAXN + c] < cnt[b * MAXN + c] else 1
    return 0


cdef void refine(int n, const uint64_t* rows, int* colors) nogil:
    cdef int ncol = count_colors(n, colors)
    cdef uint64_t cells[MAXN]
    cdef int cnt[MAXN * MAXN]
    cdef int order[MAXN]
    cdef int newc[MAXN]
    cdef int v, c, i, j, t, nnew
    while True:
        for c in range(ncol):
            cells[c] = 0
        for v in range(n):
            cells[colors[v]] |= (<uint64_t>1) << v
        for v in range(n):
            for c in range(ncol):
                cnt[v * MAXN + c] = popcount(rows[v] & cells[c])
            order[v] = v
        # insertion sort by signature; stable, n <= 64
        for i in range(1, n):
            t = order[i]
            j = i - 1
            while j >= 0 and sig_cmp(order[j], t, colors, cnt, ncol) > 0:
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = t
        nnew = 0
        newc[order[0]] = 0
        for i in range(1, n):
            if sig_cmp(order[i - 1], order[i], colors, cnt, ncol) != 0:
                nnew += 1
            newc[order[i]] = nnew
        nnew += 1
        if nnew == ncol:
            return
        for v in range(n):
            colors[v] = newc[v]
        ncol = nnew


cdef int target_cell(int n, const int* colors, int* cell) nogil:
    """Fill ``cell`` with the first smallest non-singleton cell; return its size."""
    cdef int sizes[MAXN]
    cdef int v, c, best = -1, k = 0
    for c in range(n):
        sizes[c] = 0
    for v in range(n):
        sizes[colors[v]] += 1
    for c in range(n):
        if sizes[c] > 1 and (best < 0 or sizes[c] < sizes[best]):
            best = c
    if best < 0:
        return 0
    for v in range(n):
        if colors[v] == best:
            cell[k] = v
            k += 1
    return k


cdef int code_cmp(int n, const uint64_t* a, const uint64_t* b) nogil:
    cdef int i
    for i in range(n):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


cdef int add_generator(Canon* st, const int* perm, const int* ref_perm) nogil:
    cdef int i, n = st.n
    cdef int* p
    if st.ngen == st.capgen:
        st.capgen = 16 if st.capgen == 0 else 2 * st.capgen
        p = <int*>realloc(st.gens, st.capgen * n * sizeof(int))
        if p == NULL:
            return -1
        st.gens = p
    p = st.gens + st.ngen * n
    for i in range(n):
        p[perm[i]] = ref_perm[i]
    st.ngen += 1
    return 0


cdef int leaf(Canon* st, const int* colors) nogil:
    cdef int n = st.n
    cdef int perm[MAXN]
    cdef uint64_t code[MAXN]
    cdef int v, i
    cdef uint64_t r, nr
    for v in range(n):
        perm[colors[v]] = v
    for i in range(n):
        r = st.rows[perm[i]]
        nr = 0
        while r:
            v = __builtin_ctzll(r)
            nr |= (<uint64_t>1) << colors[v]
            r &= r - 1
        code[i] = nr
    if not st.has_first:
        st.has_first = 1
        memcpy(st.first, code, n * sizeof(uint64_t))
        memcpy(st.best, code, n * sizeof(uint64_t))
        memcpy(st.first_perm, perm, n * sizeof(int))
        memcpy(st.best_perm, perm, n * sizeof(int))
        return 0
    if code_cmp(n, code, st.first) == 0:
        return add_generator(st, perm, st.first_perm)
    if code_cmp(n, code, st.best) == 0:
        return add_generator(st, perm, st.best_perm)
    if code_cmp(n, code, st.best) > 0:
        memcpy(st.best, code, n * sizeof(uint64_t))
        memcpy(st.best_perm, perm, n * sizeof(int))
    return 0


cdef inline int uf_find(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline void uf_union(int* parent, int a, int b) nogil:
    a = uf_find(parent, a)
    b = uf_find(parent, b)
    if a < b:
        parent[b] = a
    elif b < a:
        parent[a] = b


cdef void orbit_roots(Canon* st, const int* prefix, int depth, int* roots) nogil:
    cdef int n = st.n
    cdef int parent[MAXN]
    cdef int v, g, i, ok
    cdef int* p
    for v in range(n):
        parent[v] = v
    for i in range(st.ntwin):
        uf_union(parent, st.twins[2 * i], st.twins[2 * i + 1])
    for g in range(st.ngen):
        p = st.gens + g * n
        ok = 1
        for i in range(depth):
            if p[prefix[i]] != prefix[i]:
                ok = 0
                break
        if ok:
            for v in range(n):
                uf_union(parent, v, p[v])
    for v in range(n):
        roots[v] = uf_find(parent, v)


cdef int search(Canon* st, const int* colors, int* prefix, int depth) nogil:
    cdef int n = st.n
    cdef int cell[MAXN]
    cdef int explored[MAXN]
    cdef int roots[MAXN]
    cdef int child[MAXN]
    cdef int size = target_cell(n, colors, cell)
    cdef int nexp = 0, i, j, v, u, c, skip
    if size == 0:
        return leaf(st, colors)
    for i in range(size):
        v = cell[i]
        if nexp:
            orbit_roots(st, prefix, depth, roots)
            skip = 0
            for j in range(nexp):
                if roots[explored[j]] == roots[v]:
                    skip = 1
                    break
            if skip:
                continue
        explored[nexp] = v
        nexp += 1
        c = colors[v]
        for u in range(n):
            if colors[u] < c or u == v:
                child[u] = colors[u]
            else:
                child[u] = colors[u] + 1
        refine(n, st.rows, child)
        prefix[depth] = v
        if search(st, child, prefix, depth + 1) < 0:
            return -1
    return 0


def canonical_labeling(int n, rows):
    if n == 0:
        return [], ()
    cdef Canon* st = <Canon*>malloc(sizeof(Canon))
    if st == NULL:
        raise MemoryError()
    cdef int colors[MAXN]
    cdef int prefix[MAXN]
    cdef int u, w, rc
    try:
        st.n = n
        st.has_first = 0
        st.ngen = 0
        st.capgen = 0
        st.gens = NULL
        st.ntwin = 0
        load_rows(n, rows, st.rows)
        for u in range(n):
            for w in range(u + 1, n):
                if (st.rows[u] & ~((<uint64_t>1) << w)) == (st.rows[w] & ~((<uint64_t>1) << u)):
                    st.twins[2 * st.ntwin] = u
                    st.twins[2 * st.ntwin + 1] = w
                    st.ntwin += 1
        for u in range(n):
            colors[u] = 0
        with nogil:
            refine(n, st.rows, colors)
            rc = search(st, colors, prefix, 0)
        if rc < 0:
            raise MemoryError()
        perm = [st.best_perm[u] for u in range(n)]
        code = tuple([st.best[u] for u in range(n)])
        return perm, code
    finally:
        free(st.gens)
        free(st)


# ---------------------------------------------------------------------------
# power iteration
# ---------------------------------------------------------------------------

def power_iteration(int n, rows, double tol, long maxiter):
    cdef uint64_t r[MAXN]
    load_rows(n, rows, r)
    cdef double x[MAXN]
    cdef double y[MAXN]
    cdef double deg[MAXN]
    cdef double lam = 0.0, res, norm, d
    cdef long it
    cdef int v, u
    cdef uint64_t m
    for v in range(n):
        deg[v] = popcount(r[v])
        x[v] = 1.0 / sqrt(<double>n)
    with nogil:
        for it in range(1, maxiter + 1):
            lam = 0.0
            for v in range(n):
                d = deg[v] * x[v]
                m = r[v]
                while m:
                    u = __builtin_ctzll(m)
                    d += x[u]
                    m &= m - 1
                y[v] = d
                lam += x[v] * d
            res = 0.0
            norm = 0.0
            for v in range(n):
                d = fabs(y[v] - lam * x[v])
                if d > res:
                    res = d
                norm += y[v] * y[v]
            if res <= tol * (1.0 + lam):
                break
            norm = sqrt(norm)
            if norm == 0.0:
                lam = 0.0
                break
            for v in range(n):
                x[v] = y[v] / norm
    converged = it <= maxiter and (res <= tol * (1.0 + lam) or norm == 0.0)
    return lam, [x[v] for v in range(n)], min(it, maxiter), bool(converged)
