"""Real picture of H^{1,1}: the space R^{4,4}, its metric, and so(4,4) as bivectors.

The real basis is ``(p, ip, jp, kp, q, iq, jq, kq)``; quaternions act on
vectors by left multiplication of the coordinates.  The metric ``eta`` is the
real part of the quaternionic Hermitian form with ``g(p, q) = 1`` and
``g(p, p) = g(q, q) = 0``, so its Gram matrix is ``((0, E4), (E4, 0))``.

Endomorphisms are 8x8 numpy arrays with ``object`` dtype holding
``Fraction`` entries.  Bivectors are length-28 coefficient vectors over
``e_a ^ e_b`` (``a < b``) in lexicographic order, acting by

    (u ^ v) w = eta(u, w) v - eta(v, w) u.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from functools import lru_cache
from itertools import combinations
from typing import Sequence

import numpy as np

from .linalg import coordinates
from .quaternion import ONE, I, J, K, UNITS, Quaternion, QuatOpMatrix, ZERO

__all__ = [
    "DIM", "BASIS_LABELS", "GRAM", "PAIRS", "PAIR_INDEX", "MembershipError",
    "fmat", "zeros", "identity", "basis_vector", "flatten", "unflatten",
    "vector_from_quats", "quats_from_vector", "realify_op", "unrealify",
    "eta", "metric_g", "left_mult", "HypercomplexStructure",
    "QUATERNIONIC", "SPLIT", "SPLIT_TO_QUATERNIONIC",
    "is_so44", "is_sp11", "is_sp1_plus_sp11", "commutator",
    "wedge", "bivector_to_endo", "endo_to_bivector", "bivector_basis_endos",
    "eta_wedge_eta", "bivector_pairing_matrix", "bivector_of",
]

DIM = 8
BASIS_LABELS = ("p", "ip", "jp", "kp", "q", "iq", "jq", "kq")
PAIRS = tuple(combinations(range(DIM), 2))
PAIR_INDEX = {pair: n for n, pair in enumerate(PAIRS)}


class MembershipError(ValueError):
    """An endomorphism is not in the algebra an operation requires."""


def fmat(rows) -> np.ndarray:
    """Object array of Fractions from nested sequences."""
    arr = np.array(rows, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = v if isinstance(v, Fraction) else Fraction(v)
    return out


def zeros(n: int = DIM, m: int | None = None) -> np.ndarray:
    return fmat(np.zeros((n, n if m is None else m), dtype=int))


def identity(n: int = DIM) -> np.ndarray:
    return fmat(np.eye(n, dtype=int))


def basis_vector(a: int, n: int = DIM) -> np.ndarray:
    v = fmat([0] * n)
    v[a] = Fraction(1)
    return v


def flatten(M: np.ndarray) -> list[Fraction]:
    return list(M.reshape(-1))


def unflatten(v: Sequence, n: int = DIM) -> np.ndarray:
    return fmat(np.array(list(v), dtype=object).reshape(n, n))


def _scaled(M: np.ndarray) -> tuple[np.ndarray, int]:
    den = 1
    for x in M.flat:
        den = lcm(den, x.denominator)
    out = np.empty(M.shape, dtype=object)
    for idx, x in np.ndenumerate(M):
        out[idx] = x.numerator * (den // x.denominator)
    return out, den


def _unscaled(M: np.ndarray, den: int) -> np.ndarray:
    out = np.empty(M.shape, dtype=object)
    for idx, x in np.ndenumerate(M):
        out[idx] = Fraction(x, den)
    return out


def matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact product of Fraction arrays, computed on integers."""
    Ai, da = _scaled(A)
    Bi, db = _scaled(B)
    return _unscaled(Ai.dot(Bi), da * db)


def commutator(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    Ai, da = _scaled(A)
    Bi, db = _scaled(B)
    return _unscaled(Ai.dot(Bi) - Bi.dot(Ai), da * db)


GRAM = fmat([[1 if abs(a - b) == 4 else 0 for b in range(DIM)] for a in range(DIM)])


def vector_from_quats(X1, X2) -> np.ndarray:
    """Real coordinates of ``X1 p + X2 q``."""
    X1 = Quaternion.coerce(X1)
    X2 = Quaternion.coerce(X2)
    return fmat(list(X1.coeffs) + list(X2.coeffs))


def quats_from_vector(v: Sequence) -> tuple[Quaternion, Quaternion]:
    return Quaternion(*v[:4]), Quaternion(*v[4:])


def realify_op(A: QuatOpMatrix) -> np.ndarray:
    """The 8x8 real matrix of ``Op(A)`` in the basis ``(p, ip, ..., kq)``."""
    M = zeros()
    for col in range(DIM):
        X = quats_from_vector(basis_vector(col))
        Y1, Y2 = (X[0] * A[t, 0] + X[1] * A[t, 1] for t in range(2))
        M[:, col] = vector_from_quats(Y1, Y2)
    return M


def unrealify(M: np.ndarray) -> QuatOpMatrix:
    """Inverse of :func:`realify_op` for H-linear ``M`` (commuting with i, j, k)."""
    if not all(np.array_equal(commutator(M, Ia), zeros()) for Ia in QUATERNIONIC.ops):
        raise MembershipError("endomorphism is not H-linear")
    p_img = quats_from_vector(M[:, 0])
    q_img = quats_from_vector(M[:, 4])
    return QuatOpMatrix.of(p_img[0], q_img[0], p_img[1], q_img[1])


def eta(X: Sequence, Y: Sequence) -> Fraction:
    X = fmat(list(X))
    Y = fmat(list(Y))
    return X.dot(GRAM).dot(Y)


def left_mult(x: Quaternion) -> np.ndarray:
    """Real matrix of ``X -> x X`` (left scalar multiplication)."""
    M = zeros()
    for col in range(DIM):
        X1, X2 = quats_from_vector(basis_vector(col))
        M[:, col] = vector_from_quats(x * X1, x * X2)
    return M


@dataclass(frozen=True, eq=False)
class HypercomplexStructure:
    """Three endomorphisms with ``I1^2 = I2^2 = I3^2 = -1`` and ``I3 = I1 I2``."""

    name: str
    I1: np.ndarray
    I2: np.ndarray
    I3: np.ndarray

    @property
    def ops(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.I1, self.I2, self.I3)

    def relations_hold(self) -> bool:
        minus_id = -identity()
        return (all(np.array_equal(Ia.dot(Ia), minus_id) for Ia in self.ops)
                and np.array_equal(self.I1.dot(self.I2), self.I3)
                and np.array_equal(self.I2.dot(self.I1), -self.I3)
                and all(is_so44(Ia) for Ia in self.ops))

    def commutes_with(self, M: np.ndarray) -> bool:
        return all(np.array_equal(commutator(M, Ia), zeros()) for Ia in self.ops)


QUATERNIONIC = HypercomplexStructure("quaternionic", left_mult(I), left_mult(J), left_mult(K))


def _split_structure() -> HypercomplexStructure:
    # basis (p1..p4, q1..q4) of a maximal-isotropic splitting, same Gram matrix
    E2 = np.eye(2, dtype=int)
    Z2 = np.zeros((2, 2), dtype=int)
    Ib = np.block([[Z2, -E2], [E2, Z2]])
    Jb = np.array([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    Kb = np.array([[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]])
    Z4 = np.zeros((4, 4), dtype=int)
    # the block sign makes I1 skew for eta and gives I1 I2 = I3 with J, K as
    # stated; diag(I, -I) satisfies neither
    I1 = fmat(np.block([[-Ib, Z4], [Z4, -Ib]]))
    I2 = fmat(np.block([[Z4, Jb], [Jb, Z4]]))
    I3 = fmat(np.block([[Z4, Kb], [Kb, Z4]]))
    return HypercomplexStructure("split", I1, I2, I3)


SPLIT = _split_structure()


def _split_to_quaternionic() -> np.ndarray:
    # p -> p1, q -> q1 gives g(p1, q1) = 1 with both vectors isotropic
    p1 = basis_vector(0)
    q1 = basis_vector(4)
    cols = [p1] + [Ia.dot(p1) for Ia in SPLIT.ops] + [q1] + [Ia.dot(q1) for Ia in SPLIT.ops]
    return fmat(np.array(cols, dtype=object).T)


# columns: the quaternionic basis (p, ip, .., kq) written in split coordinates
SPLIT_TO_QUATERNIONIC = _split_to_quaternionic()


def is_so44(M: np.ndarray) -> bool:
    return np.array_equal(M.T.dot(GRAM) + GRAM.dot(M), zeros())


def is_sp11(M: np.ndarray, structure: HypercomplexStructure = QUATERNIONIC) -> bool:
    return is_so44(M) and structure.commutes_with(M)


def is_sp1_plus_sp11(M: np.ndarray, structure: HypercomplexStructure = QUATERNIONIC) -> bool:
    """Membership in the normalizer of span(I1, I2, I3) inside so(4,4)."""
    if not is_so44(M):
        return False
    span = [flatten(Ia) for Ia in structure.ops]
    return all(coordinates(flatten(commutator(M, Ia)), span) is not None for Ia in structure.ops)


def metric_g(X: Sequence, Y: Sequence) -> Quaternion:
    """``eta(X, Y) + i eta(X, I1 Y) + j eta(X, I2 Y) + k eta(X, I3 Y)``."""
    Y = fmat(list(Y))
    return Quaternion(eta(X, Y), *(eta(X, Ia.dot(Y)) for Ia in QUATERNIONIC.ops))


# --- bivectors ---------------------------------------------------------------

def wedge(u: Sequence, v: Sequence) -> list[Fraction]:
    """Coefficients of ``u ^ v`` in the basis ``e_a ^ e_b``, ``a < b``."""
    return [Fraction(u[a]) * v[b] - Fraction(u[b]) * v[a] for a, b in PAIRS]


def bivector_of(*terms: tuple[object, int, int]) -> list[Fraction]:
    """Build a bivector from ``(coefficient, a, b)`` terms meaning ``c e_a ^ e_b``."""
    out = [Fraction(0)] * len(PAIRS)
    for c, a, b in terms:
        if a == b:
            continue
        sign = 1
        if a > b:
            a, b, sign = b, a, -1
        out[PAIR_INDEX[(a, b)]] += sign * Fraction(c)
    return out


@lru_cache(maxsize=None)
def _pair_endo(n: int) -> np.ndarray:
    a, b = PAIRS[n]
    ea, eb = basis_vector(a), basis_vector(b)
    # (e_a ^ e_b) w = eta(e_a, w) e_b - eta(e_b, w) e_a
    return np.outer(eb, GRAM.dot(ea)) - np.outer(ea, GRAM.dot(eb))


def bivector_basis_endos() -> list[np.ndarray]:
    return [_pair_endo(n).copy() for n in range(len(PAIRS))]


def bivector_to_endo(B: Sequence) -> np.ndarray:
    M = zeros()
    for n, c in enumerate(B):
        if c:
            M = M + _pair_endo(n) * Fraction(c)
    return M


@lru_cache(maxsize=1)
def _endo_basis_flat() -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(flatten(_pair_endo(n))) for n in range(len(PAIRS)))


def endo_to_bivector(M: np.ndarray) -> list[Fraction]:
    """Solve ``bivector_to_endo(B) = M``; M must be skew with respect to eta."""
    if not is_so44(M):
        raise MembershipError("endomorphism is not in so(4,4)")
    c = coordinates(flatten(M), _endo_basis_flat())
    if c is None:  # pragma: no cover - so(4,4) is spanned by the 28 pair endomorphisms
        raise MembershipError("endomorphism is not in so(4,4)")
    return c


@lru_cache(maxsize=1)
def _pairing() -> tuple[tuple[Fraction, ...], ...]:
    rows = []
    for (a, b) in PAIRS:
        row = []
        for (c, d) in PAIRS:
            row.append(GRAM[a, c] * GRAM[b, d] - GRAM[a, d] * GRAM[b, c])
        rows.append(tuple(row))
    return tuple(rows)


def bivector_pairing_matrix() -> np.ndarray:
    """Gram matrix of ``eta ^ eta`` on the bivector basis."""
    return fmat(_pairing())


def eta_wedge_eta(B1: Sequence, B2: Sequence) -> Fraction:
    """``(u^v, z^w) -> eta(u,z) eta(v,w) - eta(u,w) eta(v,z)`` extended bilinearly."""
    P = _pairing()
    total = Fraction(0)
    for m, x in enumerate(B1):
        if not x:
            continue
        row = P[m]
        for n, y in enumerate(B2):
            if y and row[n]:
                total += x * row[n] * y
    return total
