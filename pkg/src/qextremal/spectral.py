"""Signless Laplacian matrices, Q-indices, Perron vectors and exact
characteristic polynomials.

Floating-point work (``q_index``, ``perron_vector``) uses power iteration on
Q = D + A.  Everything polynomial is exact: integer coefficients, rational
arithmetic for root isolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Sequence

from . import kernels
from .graph import Graph, GraphError, is_connected

POWER_TOL = 1e-12
POWER_MAXITER = 10**6


class ConvergenceError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SymmetricIntMatrix:
    """Square integer matrix.  Quotient matrices need not be symmetric; the
    ``symmetric`` property reports it."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
        for row, orig in zip(rows, self.entries):
            if any(Fraction(a) != Fraction(b) for a, b in zip(row, orig)):
                raise ValueError("matrix entries must be integers")
        object.__setattr__(self, "entries", rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def symmetric(self) -> bool:
        e = self.entries
        return all(e[i][j] == e[j][i] for i in range(self.dim) for j in range(i))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def signless_laplacian(g: Graph) -> SymmetricIntMatrix:
    n = g.order
    rows = []
    for v in range(n):
        r = g.rows[v]
        row = [(r >> u) & 1 for u in range(n)]
        row[v] = r.bit_count()
        rows.append(tuple(row))
    return SymmetricIntMatrix(tuple(rows))


# ---------------------------------------------------------------------------
# Q-index and Perron vector
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PerronVector:
    entries: tuple[float, ...]
    eigenvalue: float
    iterations: int
    residual: float


def _power(g: Graph, tol: float, maxiter: int):
    if g.order == 0:
        raise GraphError("empty graph has no Q-index")
    lam, x, its, ok = kernels.power_iteration(g.order, list(g.rows), tol, maxiter)
    if not ok:
        raise ConvergenceError(f"power iteration did not converge in {maxiter} steps")
    return lam, x, its


def q_index(g: Graph, tol: float = POWER_TOL, maxiter: int = POWER_MAXITER) -> float:
    """Largest eigenvalue of Q(g) = D(g) + A(g)."""
    return _power(g, tol, maxiter)[0]


def _residual(g: Graph, x: Sequence[float], lam: float) -> float:
    res = 0.0
    for v in range(g.order):
        r = g.rows[v]
        s = r.bit_count() * x[v] + sum(x[u] for u in range(g.order) if (r >> u) & 1)
        res = max(res, abs(s - lam * x[v]))
    return res


def perron_vector(g: Graph, tol: float = POWER_TOL, maxiter: int = POWER_MAXITER) -> PerronVector:
    """Positive unit eigenvector of Q(g) for the eigenvalue q(g).

    Only defined for connected graphs, where Perron-Frobenius makes it unique.
    """
    if not is_connected(g):
        raise GraphError("Perron vector requires a connected graph")
    lam, x, its = _power(g, tol, maxiter)
    norm = math.sqrt(sum(t * t for t in x))
    x = [t / norm for t in x]
    return PerronVector(tuple(x), lam, its, _residual(g, x, lam))


# ---------------------------------------------------------------------------
# integer polynomials
# ---------------------------------------------------------------------------

def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntegerPolynomial:
    """Dense univariate polynomial, coefficients in ascending degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = _trim(int(a) for a in self.coeffs)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def x(cls) -> IntegerPolynomial:
        return cls((0, 1))

    @classmethod
    def const(cls, a: int) -> IntegerPolynomial:
        return cls((a,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntegerPolynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return IntegerPolynomial(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return IntegerPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntegerPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntegerPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> IntegerPolynomial:
        return IntegerPolynomial(tuple(i * a for i, a in enumerate(self.coeffs) if i))

    def tolist(self) -> list[int]:
        return list(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            body = "x" if i == 1 else f"x^{i}" if i else ""
            num = "" if (mag == 1 and i) else str(mag)
            terms.append((sign, num + body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            s += f" {sign} {t}"
        return s


def _as_poly(p) -> IntegerPolynomial:
    if isinstance(p, IntegerPolynomial):
        return p
    if isinstance(p, int):
        return IntegerPolynomial((p,))
    raise TypeError(f"cannot combine polynomial with {type(p).__name__}")


# Rational helpers for gcd / Sturm work; kept off the public integer type.

def _rdivmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _rgcd(a, b):
    while b:
        _, r = _rdivmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]


def squarefree_part(p: IntegerPolynomial) -> list[Fraction]:
    a = [Fraction(c) for c in p.coeffs]
    d = [Fraction(c) for c in p.derivative().coeffs]
    if not d:
        return a
    g = _rgcd(a, d)
    q, r = _rdivmod(a, g)
    assert not r
    return _trim(q)


# ---------------------------------------------------------------------------
# characteristic polynomial
# ---------------------------------------------------------------------------

def _entries(m) -> list[list]:
    if isinstance(m, SymmetricIntMatrix):
        return m.tolist()
    if hasattr(m, "entries"):
        return [list(r) for r in m.entries]
    return [list(r) for r in m]


def char_poly(m) -> IntegerPolynomial:
    """det(xI - M) by Berkowitz's division-free recurrence.

    Accepts a :class:`SymmetricIntMatrix`, a quotient matrix or a nested
    sequence whose entries are integral.
    """
    a = _entries(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    for r in a:
        for t in r:
            if Fraction(t).denominator != 1:
                raise ValueError("char_poly needs an integral matrix")
    a = [[int(t) for t in r] for r in a]
    # descending coefficients of the leading principal submatrix's char poly
    poly = [1]
    for k in range(n):
        row = a[k][:k]
        col = [a[i][k] for i in range(k)]
        # Toeplitz column: 1, -a_kk, -R C, -R A C, ..., -R A^{k-1} C
        t = [1, -a[k][k]]
        vec = col
        for _ in range(k):
            t.append(-sum(r * c for r, c in zip(row, vec)))
            vec = [sum(a[i][j] * vec[j] for j in range(k)) for i in range(k)]
        new = [0] * (k + 2)
        for i in range(k + 2):
            s = 0
            for j in range(min(i, k) + 1):
                if i - j < len(t):
                    s += t[i - j] * poly[j]
            new[i] = s
        poly = new
    return IntegerPolynomial(tuple(reversed(poly)))


# ---------------------------------------------------------------------------
# largest real root
# ---------------------------------------------------------------------------

def _sturm_chain(p: list[Fraction]) -> list[list[Fraction]]:
    deriv = [i * c for i, c in enumerate(p) if i]
    chain = [list(p), deriv]
    while len(chain[-1]) > 1:
        _, r = _rdivmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return chain


def _peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _variations(chain, x) -> int:
    signs = [v for v in (_peval(p, x) for p in chain) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _root_bound(p: list[Fraction]) -> Fraction:
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def largest_real_root(p: IntegerPolynomial, hint: tuple[float, float] | None = None,
                      tol: float = 1e-13) -> float:
    """Largest real root of p, inside ``hint = (lo, hi)`` when given.

    Repeated roots are removed first (square-free part), the largest root is
    isolated with a Sturm sequence and then bisected on exact rational signs.
    """
    if p.degree < 1:
        raise ValueError("constant polynomial has no roots")
    sf = list(squarefree_part(p))
    chain = _sturm_chain(sf)
    bound = _root_bound(sf)
    if hint is None:
        lo, hi = -bound, bound
    else:
        lo, hi = Fraction(hint[0]), Fraction(hint[1])
        if lo >= hi:
            raise ValueError("empty search range")
        hi = min(hi, bound)
        lo = max(lo, -bound - 1)
    # roots in (lo, hi]; nudge lo down if it is itself a root
    if _peval(sf, lo) == 0:
        lo -= Fraction(1, 2**60)
    if _variations(chain, lo) - _variations(chain, hi) < 1:
        raise ValueError("no real root in the searched range")
    if _peval(sf, hi) == 0:
        return float(hi)
    # shrink until exactly one root lies in (lo, hi]
    while _variations(chain, lo) - _variations(chain, hi) > 1:
        mid = (lo + hi) / 2
        if _variations(chain, mid) - _variations(chain, hi) >= 1:
            lo = mid
        else:
            hi = mid
    if _peval(sf, hi) == 0:
        return float(hi)
    # square-free: the single root is a sign change
    s_hi = _peval(sf, hi) > 0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        v = _peval(sf, mid)
        if v == 0:
            return float(mid)
        if (v > 0) == s_hi:
            hi = mid
        else:
            lo = mid
    return float((lo + hi) / 2)


# ---------------------------------------------------------------------------
# reference polynomials
# ---------------------------------------------------------------------------

X = IntegerPolynomial.x()


def reference_g(n: int, k: int) -> IntegerPolynomial:
    """x (x^3 - (n-2k+4) x^2 + (3n-6k+5) x - (n-2k+4)): the characteristic
    polynomial of the 4x4 quotient of the blow-up lower-bound graph."""
    if k < 2 or n < 2 * k + 3:
        raise ValueError("need k >= 2 and n >= 2k+3")
    a = n - 2 * k + 4
    return X * (X**3 - a * X**2 + (3 * n - 6 * k + 5) * X - a)


def reference_f(n1: int, n2: int, k: int, n: int) -> IntegerPolynomial:
    """Characteristic polynomial of the 6x6 quotient of C6 o (n1, n2, 1, 1, 1, 1).

    ``k`` and ``n`` only fix the constraint n1 + n2 = n - 2k - 1.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("n1, n2 must be positive")
    if n1 + n2 != n - 2 * k - 1:
        raise ValueError("need n1 + n2 = n - 2k - 1")
    s, p = n1 + n2, n1 * n2
    return (X**6 - 2 * (s + 4) * X**5
            + (s * s + 13 * s + p + 23) * X**4
            - (5 * s * s + 6 * p + (p + 27) * s + 30) * X**3
            + (6 * s * s + 13 * p + (4 * p + 21) * s + 18) * X**2
            - (s * s + 12 * p + (3 * p + 5) * s + 4) * X)


def reference_f_difference(n1: int, k: int, n: int) -> IntegerPolynomial:
    """(2 n1 + 2k + 2 - n) x (x - 3) (x^2 - (n-2k+2) x + (n-2k+3))."""
    return (2 * n1 + 2 * k + 2 - n) * X * (X - 3) * (X**2 - (n - 2 * k + 2) * X + (n - 2 * k + 3))
