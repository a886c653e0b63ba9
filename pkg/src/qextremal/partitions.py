"""Vertex partitions, quotient matrices and equitability."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from collections.abc import Iterable, Sequence

from .graph import Graph, GraphError, is_connected
from .spectral import (SymmetricIntMatrix, char_poly, largest_real_root, q_index,
                       signless_laplacian)

QUOTIENT_TOL = 1e-8


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class VertexPartition:
    """Ordered cells covering ``0..order-1`` exactly once, none empty."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cells = tuple(tuple(sorted(c)) for c in self.cells)
        seen = set()
        for c in cells:
            if not c:
                raise PartitionError("empty cell")
            for v in c:
                if v in seen:
                    raise PartitionError(f"vertex {v} in more than one cell")
                seen.add(v)
        if seen != set(range(len(seen))):
            raise PartitionError("cells must cover 0..n-1")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> VertexPartition:
        """Consecutive index ranges of the given sizes."""
        cells, start = [], 0
        for s in sizes:
            cells.append(tuple(range(start, start + s)))
            start += s
        return cls(tuple(cells))

    @classmethod
    def singletons(cls, n: int) -> VertexPartition:
        return cls(tuple((v,) for v in range(n)))

    @property
    def order(self) -> int:
        return sum(len(c) for c in self.cells)

    def __len__(self):
        return len(self.cells)

    def merge(self, i: int, j: int) -> VertexPartition:
        """Cells i and j united, in position min(i, j)."""
        if i == j:
            raise PartitionError("cannot merge a cell with itself")
        a, b = min(i, j), max(i, j)
        cells = list(self.cells)
        cells[a] = cells[a] + cells[b]
        del cells[b]
        return VertexPartition(tuple(cells))


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.entries for x in row)

    def as_int_matrix(self) -> SymmetricIntMatrix:
        if not self.is_integral():
            raise PartitionError("quotient matrix has non-integer entries")
        return SymmetricIntMatrix(tuple(tuple(int(x) for x in row) for row in self.entries))

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def _matrix_rows(m) -> list[Sequence[int]]:
    if isinstance(m, SymmetricIntMatrix):
        return m.entries
    if isinstance(m, Graph):
        return signless_laplacian(m).entries
    return [list(r) for r in m]


def _block_row_sums(rows, p: VertexPartition):
    if p.order != len(rows):
        raise PartitionError(f"partition covers {p.order} vertices, matrix has {len(rows)}")
    for i, cell_i in enumerate(p.cells):
        sums = []
        for cell_j in p.cells:
            sums.append([sum(rows[v][u] for u in cell_j) for v in cell_i])
        yield i, sums


def quotient(m, p: VertexPartition) -> QuotientMatrix:
    """Quotient B with b_ij = average row sum of block (i, j); also reports
    whether every block has constant row sums."""
    rows = _matrix_rows(m)
    out = []
    equitable = True
    for i, sums in _block_row_sums(rows, p):
        size = len(p.cells[i])
        row = []
        for block in sums:
            row.append(Fraction(sum(block), size))
            if equitable and any(s != block[0] for s in block):
                equitable = False
        out.append(tuple(row))
    return QuotientMatrix(tuple(out), equitable)


def is_equitable(m, p: VertexPartition) -> bool:
    rows = _matrix_rows(m)
    for _, sums in _block_row_sums(rows, p):
        if any(s != block[0] for block in sums for s in block):
            return False
    return True


@dataclass(frozen=True)
class QuotientEigenReport:
    q_index: float
    quotient_root: float
    difference: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.difference <= self.tolerance


def verify_quotient_eigenvalue(g: Graph, p: VertexPartition,
                               tol: float = QUOTIENT_TOL) -> QuotientEigenReport:
    """Compare q(g) with the largest root of the quotient's characteristic
    polynomial.  They agree for equitable partitions of connected graphs."""
    if not is_connected(g):
        raise GraphError("quotient eigenvalue check needs a connected graph (irreducible Q)")
    b = quotient(g, p)
    if not b.equitable:
        raise PartitionError("partition is not equitable")
    q = q_index(g)
    root = largest_real_root(char_poly(b.as_int_matrix()))
    return QuotientEigenReport(q, root, abs(q - root), tol)
