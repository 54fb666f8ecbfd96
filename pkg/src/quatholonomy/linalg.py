"""Exact linear algebra over Q.

Rows are kept sparse (``{column: int}``) and reduced fraction-free: every
elimination step is an integer cross-multiplication followed by division by
the row content, so entries stay small and no rational arithmetic happens
until back-substitution.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Echelon", "to_int_row", "nullspace", "rank", "rref", "span_equal",
    "in_span", "coordinates", "independent", "intersect_with_kernel",
    "inverse", "determinant",
]

SparseRow = dict[int, int]


def to_int_row(values: Iterable | Mapping[int, object]) -> SparseRow:
    """Scale a dense or sparse rational row to a primitive integer sparse row."""
    if isinstance(values, Mapping):
        items = [(c, Fraction(v)) for c, v in values.items() if v != 0]
    else:
        items = [(c, Fraction(v)) for c, v in enumerate(values) if v != 0]
    if not items:
        return {}
    den = 1
    for _, v in items:
        den = lcm(den, v.denominator)
    row = {c: int(v * den) for c, v in items}
    return _primitive(row)


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _combine(row: SparseRow, prow: SparseRow, col: int) -> SparseRow:
    """Eliminate ``col`` from ``row`` using pivot row ``prow``."""
    a = prow[col]
    b = row[col]
    g = gcd(a, b)
    a //= g
    b //= g
    out = {c: a * v for c, v in row.items()}
    for c, v in prow.items():
        nv = out.get(c, 0) - b * v
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return _primitive(out)


class Echelon:
    """Incrementally maintained reduced echelon form.

    Each stored row has a pivot column that appears in no other stored row.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, SparseRow] = {}

    def reduce(self, row: SparseRow) -> SparseRow:
        for col in [c for c in row if c in self.pivots]:
            if col in row:
                row = _combine(row, self.pivots[col], col)
        # a combination can re-introduce an earlier pivot only if rows were
        # not fully reduced; they are, so one sweep suffices
        return row

    def add(self, row: SparseRow | Iterable) -> bool:
        """Insert a row; return True if it increased the rank."""
        if not isinstance(row, dict):
            row = to_int_row(row)
        row = self.reduce(row)
        if not row:
            return False
        col = min(row)
        if row[col] < 0:
            row = {c: -v for c, v in row.items()}
        for pc, prow in list(self.pivots.items()):
            if col in prow:
                self.pivots[pc] = _combine(prow, row, col)
        self.pivots[col] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, row) -> bool:
        if not isinstance(row, dict):
            row = to_int_row(row)
        return not self.reduce(row)

    def kernel(self) -> list[list[Fraction]]:
        """Basis of ``{x : row . x = 0 for every stored row}``."""
        free = [c for c in range(self.ncols) if c not in self.pivots]
        basis = []
        for f in free:
            x = [Fraction(0)] * self.ncols
            x[f] = Fraction(1)
            for pc, prow in self.pivots.items():
                v = prow.get(f)
                if v:
                    x[pc] = Fraction(-v, prow[pc])
            basis.append(x)
        return basis

    def rows(self) -> list[list[Fraction]]:
        """Rows normalised to pivot 1, sorted by pivot column."""
        out = []
        for pc in sorted(self.pivots):
            prow = self.pivots[pc]
            p = prow[pc]
            dense = [Fraction(0)] * self.ncols
            for c, v in prow.items():
                dense[c] = Fraction(v, p)
            out.append(dense)
        return out


def _echelon(rows: Iterable, ncols: int) -> Echelon:
    ech = Echelon(ncols)
    for r in rows:
        ech.add(r)
    return ech


def nullspace(rows: Iterable, ncols: int) -> list[list[Fraction]]:
    """Exact kernel basis of the matrix whose rows are given."""
    return _echelon(rows, ncols).kernel()


def rank(vectors: Sequence[Sequence], ncols: int | None = None) -> int:
    vectors = list(vectors)
    if not vectors:
        return 0
    n = ncols if ncols is not None else len(vectors[0])
    return _echelon(vectors, n).rank


def rref(vectors: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Canonical basis of the row span (reduced row echelon form)."""
    vectors = list(vectors)
    if not vectors:
        return []
    n = ncols if ncols is not None else len(vectors[0])
    return _echelon(vectors, n).rows()


def independent(vectors: Sequence[Sequence]) -> bool:
    return rank(vectors) == len(vectors)


def span_equal(a: Sequence[Sequence], b: Sequence[Sequence], ncols: int | None = None) -> bool:
    if ncols is None:
        for v in list(a) + list(b):
            ncols = len(v)
            break
        else:
            return True
    return rref(a, ncols) == rref(b, ncols)


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    if not basis:
        return not any(v)
    return _echelon(basis, len(v)).contains(v)


def coordinates(v: Sequence, basis: Sequence[Sequence]) -> list[Fraction] | None:
    """Coefficients ``c`` with ``sum c_i basis_i = v``, or None if ``v`` is outside the span.

    ``basis`` must be linearly independent.
    """
    k = len(basis)
    if k == 0:
        return [] if not any(v) else None
    n = len(v)
    # unknowns c_0..c_{k-1}, augmented column k holds -v
    rows = []
    for t in range(n):
        row = {i: basis[i][t] for i in range(k) if basis[i][t] != 0}
        if v[t] != 0:
            row[k] = -Fraction(v[t])
        if row:
            rows.append(to_int_row(row))
    ech = _echelon(rows, k + 1)
    if k in ech.pivots:
        return None
    sol = [Fraction(0)] * k
    for pc, prow in ech.pivots.items():
        sol[pc] = Fraction(-prow.get(k, 0), prow[pc])
    return sol


def intersect_with_kernel(basis: Sequence[Sequence], constraints: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of ``{sum c_i basis_i : constraint . (sum c_i basis_i) = 0}``."""
    k = len(basis)
    if k == 0:
        return []
    rows = []
    for con in constraints:
        rows.append([sum((Fraction(con[t]) * b[t] for t in range(len(con)) if con[t] != 0), Fraction(0))
                     for b in basis])
    out = []
    n = len(basis[0])
    for c in nullspace(rows, k):
        out.append([sum((c[i] * basis[i][t] for i in range(k) if c[i] != 0), Fraction(0)) for t in range(n)])
    return out


def inverse(M: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return [row[n:] for row in A]


def determinant(M: Sequence[Sequence]) -> Fraction:
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        p = A[col][col]
        det *= p
        for r in range(col + 1, n):
            if A[r][col] != 0:
                f = A[r][col] / p
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return det
