"""Named subalgebras of sp(1) + sp(1,1) acting on R^{4,4}.

Each :class:`Subalgebra` is an explicit rational basis of 8x8 matrices in a
fixed presentation.  Conjugacy is never decided: two entries are "the same"
only if they span the same subspace in the same basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

import numpy as np

from . import linalg
from .quaternion import ONE, I, J, K, ZERO, Quaternion, QuatOpMatrix, ab_pair, q
from .realification import (
    DIM, QUATERNIONIC, SPLIT, SPLIT_TO_QUATERNIONIC, commutator, eta, flatten,
    fmat, is_so44, realify_op, unflatten, zeros, vector_from_quats,
    quats_from_vector, basis_vector,
)

__all__ = [
    "ClosureError", "Subalgebra", "InvariantSubspace", "NormalizedBasis",
    "ab", "catalog", "get", "FAMILIES", "FAMILY_DEFAULTS", "NAMES", "preserves", "normalize_basis",
    "basis_change_matrix", "shift_matrix", "transport",
    "g1", "g2", "g3", "g4", "g5", "g6", "sp1", "h0", "sp1_plus_g1",
    "sl1h", "quaternion_diagonal", "r0i", "case_i3", "case_ii", "case_iii",
    "case_iv1", "sl2c", "sl2c_block", "sp4r_block", "hp_line", "hq_line",
]


class ClosureError(ValueError):
    """A proposed basis does not span a Lie algebra."""


@dataclass(frozen=True, eq=False)
class Subalgebra:
    name: str
    basis: tuple[np.ndarray, ...]
    params: dict = field(default_factory=dict)
    source: str = ""
    presentation: str = "quaternionic"

    def __post_init__(self):
        basis = tuple(fmat(M) for M in self.basis)
        object.__setattr__(self, "basis", basis)
        flat = [flatten(M) for M in basis]
        if linalg.rank(flat, DIM * DIM) != len(flat):
            raise ValueError(f"{self.name}: basis is linearly dependent")
        for n, M in enumerate(basis):
            if not is_so44(M):
                raise ValueError(f"{self.name}: basis element {n} is not in so(4,4)")
        ech = linalg.Echelon(DIM * DIM)
        for v in flat:
            ech.add(v)
        for a, b in combinations(range(len(basis)), 2):
            if not ech.contains(flatten(commutator(basis[a], basis[b]))):
                raise ClosureError(
                    f"{self.name}: bracket [X{a}, X{b}]{self._label(a, b)} leaves the span")

    def _label(self, a, b) -> str:
        labels = self.params.get("_labels")
        if labels:
            return f" = [{labels[a]}, {labels[b]}]"
        return ""

    @property
    def dim(self) -> int:
        return len(self.basis)

    def flat_basis(self) -> list[list[Fraction]]:
        return [flatten(M) for M in self.basis]

    def canonical(self) -> list[list[Fraction]]:
        """Reduced row echelon form of the flattened basis."""
        return linalg.rref(self.flat_basis(), DIM * DIM)

    def contains(self, M: np.ndarray) -> bool:
        return linalg.in_span(flatten(M), self.flat_basis())

    def coordinates(self, M: np.ndarray) -> list[Fraction] | None:
        return linalg.coordinates(flatten(M), self.flat_basis())

    def same_span(self, other: "Subalgebra") -> bool:
        return linalg.span_equal(self.flat_basis(), other.flat_basis(), DIM * DIM)

    def is_subalgebra_of(self, other: "Subalgebra") -> bool:
        return all(other.contains(M) for M in self.basis)

    def conjugate(self, T: np.ndarray, name: str | None = None) -> "Subalgebra":
        """The same algebra written in the basis given by the columns of ``T``."""
        Tinv = fmat(linalg.inverse(T.tolist()))
        return Subalgebra(name or self.name, tuple(Tinv.dot(M).dot(T) for M in self.basis),
                          dict(self.params), self.source, self.presentation)

    def __repr__(self):
        extra = "".join(f", {k}={v}" for k, v in self.params.items() if not k.startswith("_"))
        return f"Subalgebra({self.name!r}, dim={self.dim}{extra})"


def ab(a, b=ZERO) -> np.ndarray:
    """Real 8x8 matrix of the stabilizer element ``(a, b)``."""
    return realify_op(ab_pair(a, b))


def _alg(name, elems, source="", params=None, labels=None, presentation="quaternionic"):
    params = dict(params or {})
    if labels:
        params["_labels"] = tuple(labels)
    return Subalgebra(name, tuple(elems), params, source, presentation)


def _pairs(name, pairs, source="", params=None):
    labels = [f"({a},{b})" for a, b in pairs]
    return _alg(name, [ab(a, b) for a, b in pairs], source, params, labels)


def g1() -> Subalgebra:
    return _pairs("g1", [(ONE, ZERO), (I, ZERO), (J, ZERO), (K, ZERO), (ZERO, I), (ZERO, J), (ZERO, K)],
                  "full stabilizer of the isotropic quaternionic line Hp")


def g2() -> Subalgebra:
    return _pairs("g2", [(I, ZERO), (J, ZERO), (K, ZERO), (ZERO, I), (ZERO, J), (ZERO, K)],
                  "a, b imaginary")


def g3() -> Subalgebra:
    return _pairs("g3", [(ONE, ZERO), (I, ZERO), (ZERO, I), (ZERO, J), (ZERO, K)],
                  "a in R + Ri, b imaginary")


def g4() -> Subalgebra:
    return _pairs("g4", [(ZERO, I), (ZERO, J), (ZERO, K)], "(0, b), b imaginary")


def g5() -> Subalgebra:
    return _pairs("g5", [(ONE, ZERO), (K, ZERO), (ZERO, I), (ZERO, J)],
                  "a in R + Rk, b in Ri + Rj")


def g6() -> Subalgebra:
    return _pairs("g6", [(ZERO, I), (ZERO, J)], "(0, b), b in Ri + Rj")


def sp1() -> Subalgebra:
    return _alg("sp1", QUATERNIONIC.ops, "span of I1, I2, I3", labels=["I1", "I2", "I3"])


def h0() -> Subalgebra:
    return _alg("h0", list(QUATERNIONIC.ops) + [ab(x) for x in (ONE, I, J, K)],
                "sp(1) + {(a, 0)}", labels=["I1", "I2", "I3", "(1,0)", "(i,0)", "(j,0)", "(k,0)"])


def sp1_plus_g1() -> Subalgebra:
    return _alg("sp1+g1", list(QUATERNIONIC.ops) + list(g1().basis), "sp(1) + g1")


def sl1h() -> Subalgebra:
    return _pairs("sl1H", [(I, ZERO), (J, ZERO), (K, ZERO)], "(a, 0), a imaginary")


def quaternion_diagonal() -> Subalgebra:
    return _pairs("case-IV-2", [(ONE, ZERO), (I, ZERO), (J, ZERO), (K, ZERO)],
                  "{(a, 0) | a in H}")


def r0i() -> Subalgebra:
    return _pairs("R(0,i)", [(ZERO, I)], "the line R(0, i)")


def case_i3(alpha=1, beta=0) -> Subalgebra:
    alpha, beta = Fraction(alpha), Fraction(beta)
    if alpha == 0 and beta == 0:
        raise ValueError("case-I-3 needs alpha^2 + beta^2 != 0")
    return _pairs("case-I-3", [(q(alpha, beta), ZERO), (ZERO, I), (ZERO, J), (ZERO, K)],
                  "R(alpha + beta i, 0) + Im H", {"alpha": alpha, "beta": beta})


def case_ii(alpha=0, beta=1, gamma=0) -> Subalgebra:
    """``R(alpha + beta k, 0) + R(-beta + alpha k, gamma k) + R(0,i) + R(0,j)``.

    Closed only when ``alpha * gamma = 0``.
    """
    alpha, beta, gamma = Fraction(alpha), Fraction(beta), Fraction(gamma)
    if alpha == 0 and beta == 0:
        raise ValueError("case-II needs alpha^2 + beta^2 != 0")
    return _pairs("case-II", [(q(alpha, 0, 0, beta), ZERO), (q(-beta, 0, 0, alpha), q(0, 0, 0, gamma)),
                              (ZERO, I), (ZERO, J)],
                  "two-dimensional intersection with Im H", {"alpha": alpha, "beta": beta, "gamma": gamma})


def case_iii(alpha=1, beta=0) -> Subalgebra:
    alpha, beta = Fraction(alpha), Fraction(beta)
    return _pairs("case-III", [(ONE, q(0, 0, -alpha, beta)), (I, q(0, 0, beta, alpha)), (ZERO, I)],
                  "R(1, -alpha j + beta k) + R(i, beta j + alpha k) + R(0, i)",
                  {"alpha": alpha, "beta": beta})


def case_iv1(alpha=0, beta=1) -> Subalgebra:
    """``R(i,0) + R(j, alpha j - beta k) + R(k, beta j + alpha k)``.

    ``[(j, .), (k, .)] = (-2i, -4 alpha i)``, so the span is a Lie algebra
    only for ``alpha = 0``; other values raise :class:`ClosureError`.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    return _pairs("case-IV-1", [(I, ZERO), (J, q(0, 0, alpha, -beta)), (K, q(0, 0, beta, alpha))],
                  "R(i,0) + R(j, alpha j - beta k) + R(k, beta j + alpha k)",
                  {"alpha": alpha, "beta": beta})


# --- the complex symplectic algebra in the split presentation ---------------

def _complex_block(X, Y) -> np.ndarray:
    """Real 4x4 matrix of the complex 2x2 matrix ``X + iY`` on (z1, z2) = (p1 + i p3, p2 + i p4)."""
    X = np.array(X, dtype=object)
    Y = np.array(Y, dtype=object)
    return fmat(np.block([[X, -Y], [Y, X]]))


def sl2c_block() -> list[np.ndarray]:
    """Real basis of sl(2, C) acting on W = R^4 (6 matrices)."""
    h = [[1, 0], [0, -1]]
    e = [[0, 1], [0, 0]]
    f = [[0, 0], [1, 0]]
    z = [[0, 0], [0, 0]]
    out = []
    for m in (h, e, f):
        out.append(_complex_block(m, z))
        out.append(_complex_block(z, m))
    return out


def sp4r_block() -> list[np.ndarray]:
    """Basis of sp(4, R) for the symplectic form with matrix J (10 matrices)."""
    Jm = SPLIT.I2[:4, 4:]
    rows = []
    # A^t J + J A = 0, unknowns A_ab
    for r in range(4):
        for c in range(4):
            row = [Fraction(0)] * 16
            for a in range(4):
                # (A^t J)_rc = sum_a A_ar J_ac ; (J A)_rc = sum_a J_ra A_ac
                row[a * 4 + r] += Jm[a, c]
                row[a * 4 + c] += Jm[r, a]
            rows.append(row)
    return [fmat(np.array(v, dtype=object).reshape(4, 4)) for v in linalg.nullspace(rows, 16)]


def sl2c(presentation: str = "split") -> Subalgebra:
    """``{diag(A, -A^t) | A in sl(2,C) in sp(4,R)}`` for the split hypercomplex structure.

    With ``presentation="quaternionic"`` the algebra is moved to the basis
    ``(p, ip, ..., kq)`` by the fixed change of basis :data:`SPLIT_TO_QUATERNIONIC`.
    """
    Z = np.zeros((4, 4), dtype=object)
    elems = [fmat(np.block([[A, Z], [Z, -A.T]])) for A in sl2c_block()]
    alg = _alg("sl2C", elems, "sl(2,C) in sp(4,R), split presentation", presentation="split")
    if presentation == "split":
        return alg
    if presentation != "quaternionic":
        raise ValueError(f"unknown presentation {presentation!r}")
    out = alg.conjugate(SPLIT_TO_QUATERNIONIC)
    return Subalgebra(out.name, out.basis, out.params, "sl(2,C) in sp(4,R), quaternionic presentation")


FAMILIES: dict[str, Callable[..., Subalgebra]] = {
    "case-I-3": case_i3,
    "case-II": case_ii,
    "case-III": case_iii,
    "case-IV-1": case_iv1,
}

_FIXED: dict[str, Callable[[], Subalgebra]] = {
    "g1": g1, "g2": g2, "g3": g3, "g4": g4, "g5": g5, "g6": g6,
    "h0": h0, "sp1+g1": sp1_plus_g1, "sp1": sp1, "sl1H": sl1h,
    "case-IV-2": quaternion_diagonal, "R(0,i)": r0i, "sl2C": sl2c,
}

NAMES = tuple(_FIXED) + tuple(FAMILIES)


def get(name: str, **params) -> Subalgebra:
    """Look up a catalog entry; family parameters are passed as keywords."""
    if name in _FIXED:
        if params:
            raise ValueError(f"{name} takes no parameters")
        return _FIXED[name]()
    if name in FAMILIES:
        return FAMILIES[name](**params)
    raise KeyError(f"unknown algebra {name!r}; known: {', '.join(NAMES)}")


FAMILY_DEFAULTS = {
    "case-I-3": {"alpha": 1, "beta": 0},
    # gamma != 0: the representative not literally equal to g5
    "case-II": {"alpha": 0, "beta": 1, "gamma": 1},
    "case-III": {"alpha": 1, "beta": 0},
    "case-IV-1": {"alpha": 0, "beta": 1},
}


def catalog() -> list[Subalgebra]:
    """Every fixed catalog algebra plus each family at its default parameters."""
    out = [f() for f in _FIXED.values()]
    out.extend(FAMILIES[name](**FAMILY_DEFAULTS[name]) for name in FAMILIES)
    return out


# --- invariant subspaces ----------------------------------------------------

@dataclass(frozen=True, eq=False)
class InvariantSubspace:
    basis: tuple[np.ndarray, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(fmat(list(v)) for v in self.basis))

    @property
    def dim(self) -> int:
        return linalg.rank([list(v) for v in self.basis], DIM)

    def contains(self, v) -> bool:
        return linalg.in_span(list(v), [list(b) for b in self.basis])

    @property
    def isotropic(self) -> bool:
        return all(eta(u, v) == 0 for u in self.basis for v in self.basis)

    def invariant_under(self, M: np.ndarray) -> bool:
        return all(self.contains(M.dot(v)) for v in self.basis)

    @property
    def quaternionic_flags(self) -> tuple[bool, bool, bool]:
        return tuple(self.invariant_under(Ia) for Ia in QUATERNIONIC.ops)


def hp_line() -> InvariantSubspace:
    return InvariantSubspace(tuple(basis_vector(n) for n in range(4)))


def hq_line() -> InvariantSubspace:
    return InvariantSubspace(tuple(basis_vector(n) for n in range(4, 8)))


def preserves(g: Subalgebra, W: InvariantSubspace) -> bool:
    return all(W.invariant_under(M) for M in g.basis)


# --- basis normalisation ----------------------------------------------------

@dataclass(frozen=True)
class NormalizedBasis:
    """Kernel solution ``x`` of a normalising equation and its norm ``x conj(x)``.

    The unit-norm solution is ``x / sqrt(norm_sq)``; every use here is
    conjugation-invariant, so the scalar is carried instead of taken.
    """

    x: Quaternion
    norm_sq: Fraction


def _left_right_system(a: Quaternion) -> list[list[Fraction]]:
    # rows of x -> x a - i x in the coordinates x0..x3
    cols = []
    for unit in (ONE, I, J, K):
        cols.append(list((unit * a - I * unit).coeffs))
    return [[cols[c][r] for c in range(4)] for r in range(4)]


def _primitive_quaternion(v: Sequence[Fraction]) -> Quaternion:
    row = linalg.to_int_row(list(v))
    out = [0] * len(v)
    for c, x in row.items():
        out[c] = x
    if out[min(row)] < 0:
        out = [-x for x in out]
    return Quaternion(*out)


def normalize_basis(a, mode: str = "lemma-2") -> NormalizedBasis:
    """Find ``x`` so that the basis ``(x p, x q)`` puts an operator in normal form.

    ``lemma-2`` / ``lemma-3``: ``a`` imaginary of norm 1, solve ``x a = i x``
    (so ``(a, 0)`` becomes ``(i, 0)``, or ``(0, a)`` becomes ``(0, i)``).
    ``lemma-4``: ``a = alpha j + beta k`` with ``alpha^2 + beta^2 = 1``, solve
    for ``x = x0 + y i`` with ``x a = j x`` (``(0, i)`` is left unchanged).
    """
    a = Quaternion.coerce(a)
    if mode in ("lemma-2", "lemma-3"):
        if not a.is_imaginary() or a.norm_sq() != 1:
            raise ValueError(f"{mode} needs an imaginary unit quaternion, got {a}")
        kernel = linalg.nullspace(_left_right_system(a), 4)
        x = _primitive_quaternion(kernel[0])
    elif mode == "lemma-4":
        if a.a0 != 0 or a.a1 != 0 or a.norm_sq() != 1:
            raise ValueError(f"lemma-4 needs alpha j + beta k with alpha^2 + beta^2 = 1, got {a}")
        al, be = a.a2, a.a3
        kernel = linalg.nullspace([[al - 1, -be], [be, al + 1]], 2)
        xy = _primitive_quaternion(kernel[0])
        x = q(xy.a0, xy.a1)
        target = J
        if x * a != target * x:  # pragma: no cover - guaranteed by the kernel
            raise ArithmeticError("normalising equation not satisfied")
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return NormalizedBasis(x, x.norm_sq())


def basis_change_matrix(x: Quaternion) -> np.ndarray:
    """Columns: real coordinates of ``(x p, i x p, j x p, k x p, x q, ...)``."""
    x = Quaternion.coerce(x)
    cols = []
    for col in range(DIM):
        X1, X2 = quats_from_vector(basis_vector(col))
        cols.append(vector_from_quats(X1 * x, X2 * x))
    return fmat(np.array(cols, dtype=object).T)


def shift_matrix(c: Quaternion) -> np.ndarray:
    """Basis change ``p' = p, q' = q + c p`` (``c`` imaginary keeps q' isotropic)."""
    c = Quaternion.coerce(c)
    cols = []
    for col in range(DIM):
        X1, X2 = quats_from_vector(basis_vector(col))
        cols.append(vector_from_quats(X1 + X2 * c, X2))
    return fmat(np.array(cols, dtype=object).T)


def transport(M: np.ndarray, T: np.ndarray) -> np.ndarray:
    """Matrix of the endomorphism ``M`` in the basis formed by the columns of ``T``."""
    return fmat(linalg.inverse(T.tolist())).dot(M).dot(T)
