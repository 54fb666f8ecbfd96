"""First prolongations of linear Lie algebras."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg
from .realification import fmat

__all__ = ["Prolongation", "first_prolongation"]


@dataclass(frozen=True)
class Prolongation:
    """Basis of ``{S : W -> h | S(x) y = S(y) x}``.

    Each basis element is the tuple ``(S(e_0), ..., S(e_{n-1}))``.
    """

    n: int
    basis: tuple[tuple[np.ndarray, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def first_prolongation(h: Sequence[np.ndarray]) -> Prolongation:
    """First prolongation of the span of the square matrices ``h``."""
    mats = [fmat(M) for M in h]
    if not mats:
        return Prolongation(0, ())
    n = mats[0].shape[0]
    # work with an independent spanning set
    ech = linalg.Echelon(n * n)
    gens = [M for M in mats if ech.add(list(M.flat))]
    k = len(gens)
    # unknowns c[a, m]: S(e_a) = sum_m c[a, m] gens[m]
    rows = []
    for a in range(n):
        for b in range(a + 1, n):
            for i in range(n):
                row = {}
                for m, G in enumerate(gens):
                    if G[i, b]:
                        row[a * k + m] = row.get(a * k + m, 0) + G[i, b]
                    if G[i, a]:
                        row[b * k + m] = row.get(b * k + m, 0) - G[i, a]
                row = {u: v for u, v in row.items() if v}
                if row:
                    rows.append(linalg.to_int_row(row))
    basis = []
    for vec in linalg.nullspace(rows, n * k):
        S = []
        for a in range(n):
            M = fmat(np.zeros((n, n), dtype=object))
            for m, G in enumerate(gens):
                c = vec[a * k + m]
                if c:
                    M = M + G * c
            S.append(M)
        basis.append(tuple(S))
    return Prolongation(n, tuple(basis))
