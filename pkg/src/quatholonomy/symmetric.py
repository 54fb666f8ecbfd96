"""Symmetric pairs, symmetric triples and the lambda classification.

A pair ``(g, R)`` with ``R`` annihilated by ``g`` and spanning ``g`` gives the
Lie algebra ``h = g + R^{4,4}`` with ``[x, y] = -R(x, y)``, ``[A, x] = Ax``
and ``[A, B] = AB - BA``.  Jacobi on ``h`` is checked exactly.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from . import algebra, linalg
from .algebra import Subalgebra
from .curvature import (
    CurvatureSpace, CurvatureTensor, PropOneParams, annihilated_space,
    annihilator_action, bianchi_nullspace, prop1_construct, scalar_curvature,
    span_of_images,
)
from .polyroots import RealRoot, real_roots
from .quaternion import UNITS, ZERO, Quaternion
from .realification import (
    DIM, GRAM, MembershipError, basis_vector, commutator, flatten, fmat,
    unrealify,
)

__all__ = [
    "JacobiError", "ClassificationError", "SymmetricPair", "SymmetricTriple",
    "build_triple", "FilterEntry", "FilterResult", "holonomy_filter",
    "PhiMap", "phi_from_tensor", "LambdaInvariant", "canonical_lambda",
    "lambda_polynomial", "family_tensor", "two_dim_tensor",
    "rotation_matrix", "rotate_phi", "rotate_tensor", "generic_element",
]


class JacobiError(ValueError):
    """The bracket on ``g + R^{4,4}`` violates the Jacobi identity."""


class ClassificationError(ValueError):
    pass


# --- pairs and triples -------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SymmetricPair:
    algebra: Subalgebra
    tensor: CurvatureTensor

    def problems(self) -> list[str]:
        """Reasons the pair is not a symmetric pair; empty when it is."""
        out = []
        if not self.tensor.satisfies_bianchi():
            out.append("tensor violates the Bianchi identity")
        if not self.tensor.images_in(self.algebra):
            out.append("tensor takes values outside the algebra")
        for n, A in enumerate(self.algebra.basis):
            if not annihilator_action(A, self.tensor).is_zero():
                out.append(f"generator {n} does not annihilate the tensor")
                break
        if not linalg.span_equal(span_of_images([self.tensor]), self.algebra.flat_basis(), DIM * DIM):
            out.append("tensor images do not span the algebra")
        return out

    def is_valid(self) -> bool:
        return not self.problems()


@dataclass(frozen=True, eq=False)
class SymmetricTriple:
    """``h = h_+ + h_-`` with ``h_+ = g`` (first ``dim g`` coordinates) and ``h_- = R^{4,4}``."""

    pair: SymmetricPair
    structure: tuple[tuple[tuple[Fraction, ...], ...], ...]

    @property
    def dim(self) -> int:
        return len(self.structure)

    @property
    def dim_plus(self) -> int:
        return self.pair.algebra.dim

    def bracket(self, u: Sequence, v: Sequence) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                c = Fraction(a) * b
                for t, s in enumerate(self.structure[i][j]):
                    if s:
                        out[t] += c * s
        return out

    def sigma(self, u: Sequence) -> list[Fraction]:
        k = self.dim_plus
        return [Fraction(x) if t < k else -Fraction(x) for t, x in enumerate(u)]

    def sigma_is_automorphism(self) -> bool:
        n = self.dim
        for i in range(n):
            for j in range(n):
                ei, ej = _unit(i, n), _unit(j, n)
                if self.sigma(self.bracket(ei, ej)) != self.bracket(self.sigma(ei), self.sigma(ej)):
                    return False
        return True

    def eta_invariant(self) -> bool:
        """``eta([A, x], y) + eta(x, [A, y]) = 0`` for ``A`` in ``h_+``."""
        for A in self.pair.algebra.basis:
            if any((GRAM.dot(A) + A.T.dot(GRAM)).flat):
                return False
        return True


def _unit(i: int, n: int) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return v


def _structure_constants(pair: SymmetricPair) -> list[list[list[Fraction]]]:
    g = pair.algebra
    k = g.dim
    n = k + DIM
    R = pair.tensor

    def in_g(M):
        c = g.coordinates(M)
        if c is None:
            raise JacobiError("bracket leaves the algebra: " + "tensor image not in g")
        return list(c) + [Fraction(0)] * DIM

    table = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i < k and j < k:
                table[i][j] = in_g(commutator(g.basis[i], g.basis[j]))
            elif i < k:
                table[i][j] = [Fraction(0)] * k + list(g.basis[i][:, j - k])
            elif j < k:
                table[i][j] = [Fraction(0)] * k + list(-g.basis[j][:, i - k])
            else:
                table[i][j] = in_g(-R.pair(i - k, j - k))
    return table


def build_triple(pair: SymmetricPair, check_pair: bool = False) -> SymmetricTriple:
    """Assemble ``h`` and verify Jacobi on every basis triple.

    With ``check_pair`` the annihilation and span conditions are also required.
    """
    if check_pair:
        problems = pair.problems()
        if problems:
            raise JacobiError("; ".join(problems))
    table = _structure_constants(pair)
    triple = SymmetricTriple(pair, tuple(tuple(tuple(v) for v in row) for row in table))
    n = triple.dim
    labels = [f"A{m}" for m in range(pair.algebra.dim)] + [f"e{a}" for a in range(DIM)]
    for a, b, c in combinations(range(n), 3):
        ea, eb, ec = _unit(a, n), _unit(b, n), _unit(c, n)
        total = [x + y + z for x, y, z in zip(
            triple.bracket(ea, triple.bracket(eb, ec)),
            triple.bracket(eb, triple.bracket(ec, ea)),
            triple.bracket(ec, triple.bracket(ea, eb)))]
        if any(total):
            raise JacobiError(f"Jacobi fails on ({labels[a]}, {labels[b]}, {labels[c]})")
    return triple


def generic_element(space: CurvatureSpace, seed: int = 0) -> CurvatureTensor:
    """A deterministic pseudo-random combination of the basis of ``space``."""
    rng = random.Random(seed)
    return space.combination([rng.randint(-7, 7) or 1 for _ in range(space.dim)])


# --- the holonomy filter -------------------------------------------------------

@dataclass(frozen=True)
class FilterEntry:
    algebra: str
    dim_R: int
    dim_R0: int
    spans: bool
    nonzero_scalar: bool


@dataclass(frozen=True)
class FilterResult:
    entries: tuple[FilterEntry, ...]

    @property
    def hyper_kahler(self) -> list[str]:
        return [e.algebra for e in self.entries if e.spans and not e.nonzero_scalar]

    @property
    def nonzero_scalar(self) -> list[str]:
        return [e.algebra for e in self.entries if e.spans and e.nonzero_scalar]


def holonomy_filter(candidates: Sequence[Subalgebra] | None = None, tries: int = 4) -> FilterResult:
    """Keep the algebras ``g`` admitting ``R`` in ``R_0(g)`` whose images span ``g``.

    Entries are split by whether ``R(g)`` contains a tensor of nonzero scalar
    curvature; this does not depend on the basis the algebra is written in.
    """
    candidates = list(candidates) if candidates is not None else algebra.catalog()
    entries = []
    for g in candidates:
        space = bianchi_nullspace(g)
        ann = annihilated_space(g, space)
        spans = False
        if ann.dim and linalg.span_equal(span_of_images(ann), g.flat_basis(), DIM * DIM):
            for seed in range(tries):
                R = generic_element(ann, seed)
                if linalg.span_equal(span_of_images([R]), g.flat_basis(), DIM * DIM):
                    spans = True
                    break
        scal = any(scalar_curvature(T) != 0 for T in space.basis)
        entries.append(FilterEntry(g.name, space.dim, ann.dim, spans, scal))
    return FilterResult(tuple(entries))


# --- phi and lambda ------------------------------------------------------------

@dataclass(frozen=True)
class PhiMap:
    """Matrix of ``phi: Im H -> Im H`` in the basis (i, j, k), ``R(q, y q) = Op((0, phi(y)), (0, 0))``."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        M = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", M)
        if any(M[a][b] != M[b][a] for a in range(3) for b in range(3)):
            raise ValueError("Mat phi must be symmetric")
        if M[0][0] + M[1][1] + M[2][2] != 0:
            raise ValueError("Mat phi must be trace-free")

    @classmethod
    def from_d(cls, d: Sequence) -> "PhiMap":
        d1, d2, d3, d4, d5 = (Fraction(x) for x in d)
        return cls(((d1, d2, d3), (d2, d4, d5), (d3, d5, -d1 - d4)))

    def det(self) -> Fraction:
        return linalg.determinant(self.matrix)

    def char_coefficients(self) -> tuple[Fraction, Fraction]:
        """``(c, d)`` with characteristic polynomial ``t^3 + c t - d``."""
        M = self.matrix
        c = (M[0][0] * M[1][1] - M[0][1] ** 2 + M[0][0] * M[2][2] - M[0][2] ** 2
             + M[1][1] * M[2][2] - M[1][2] ** 2)
        return c, self.det()

    def flat(self) -> list[Fraction]:
        return [x for row in self.matrix for x in row]


def phi_from_tensor(R: CurvatureTensor) -> PhiMap:
    """Read ``Mat phi`` off ``R(q, I_s q)``, s = 1, 2, 3."""
    cols = []
    for s in (1, 2, 3):
        A = unrealify(R.pair(4, 4 + s))
        if A[0, 0] != ZERO or A[1, 0] != ZERO or A[1, 1] != ZERO or not A[0, 1].is_imaginary():
            raise MembershipError(f"R(q, I{s} q) is not of the form Op((0, b), (0, 0))")
        b = A[0, 1]
        cols.append((b.a1, b.a2, b.a3))
    return PhiMap(tuple(tuple(cols[s][t] for s in range(3)) for t in range(3)))


def lambda_polynomial(K: Fraction) -> list[Fraction]:
    """``(1 + l + l^2)^3 + K l^2 (1 + l)^2`` in ascending coefficients."""
    a = [Fraction(1), Fraction(1), Fraction(1)]
    cube = _pmul(_pmul(a, a), a)
    b = _pmul([Fraction(0), Fraction(0), Fraction(1)], _pmul([1, 1], [1, 1]))
    out = [Fraction(0)] * 7
    for n, c in enumerate(cube):
        out[n] += c
    for n, c in enumerate(b):
        out[n] += K * c
    return out


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += Fraction(x) * y
    return out


@dataclass(frozen=True)
class LambdaInvariant:
    """Canonical ordered triple ``(1, lambda, -1 - lambda)``.

    ``lambda`` lies in ``[-1/2, 0)`` (one positive eigenvalue) or ``[1, oo)``
    (two positive eigenvalues).  ``invariant`` is the exact pair
    ``(c^3 / d^2, sign d)`` of the characteristic polynomial ``t^3 + c t - d``;
    it is unchanged by rotations and positive rescaling.
    """

    root: RealRoot
    invariant: tuple[Fraction, int]
    sign_flip_used: bool = False

    @property
    def value(self) -> Fraction | None:
        return self.root.exact

    @property
    def is_exact(self) -> bool:
        return self.root.is_rational

    def triple(self) -> tuple[Fraction, Fraction, Fraction]:
        if self.value is None:
            raise ClassificationError("lambda is irrational; only an interval is known")
        return Fraction(1), self.value, -1 - self.value

    def render(self) -> str:
        return self.root.render()


def canonical_lambda(phi: PhiMap, allow_sign_flip: bool = False) -> LambdaInvariant:
    """Canonical lambda of a nondegenerate trace-free symmetric ``Mat phi``.

    With ``allow_sign_flip`` the tensor may first be replaced by ``-R`` (a
    metric sign flip in neutral signature), which sends every case to
    ``lambda >= 1``.
    """
    c, d = phi.char_coefficients()
    if d == 0:
        raise ClassificationError("does not span: det Mat phi = 0")
    flip = False
    if allow_sign_flip and d > 0:
        d, flip = -d, True
    K = c ** 3 / d ** 2
    roots = real_roots(lambda_polynomial(K))
    if d > 0:
        chosen = [r for r in roots if Fraction(-1, 2) <= r.lo and r.hi < 0]
    else:
        chosen = [r for r in roots if r.lo >= 1]
    if len(chosen) != 1:
        raise ClassificationError(f"no unique canonical lambda for K = {K}")
    return LambdaInvariant(chosen[0], (K, 1 if d > 0 else -1), flip)


# --- the explicit families -----------------------------------------------------

def family_tensor(lam) -> CurvatureTensor:
    """``R(q, I1 q) = Op(0, i)``, ``R(q, I2 q) = Op(0, lam j)``, ``R(q, I3 q) = Op(0, -(1 + lam) k)``."""
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("lambda = 0 is excluded")
    return prop1_construct(PropOneParams(ZERO, ZERO, (1, 0, 0, lam, 0)))


def two_dim_tensor() -> CurvatureTensor:
    """``R(q, I1 q) = Op(0, i)``, ``R(q, I2 q) = Op(0, -j)``, ``R(q, I3 q) = 0``."""
    return prop1_construct(PropOneParams(ZERO, ZERO, (1, 0, 0, -1, 0)))


# --- rotations of Im H ----------------------------------------------------------

def rotation_matrix(x: Quaternion) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of ``y -> conj(x) y x / |x|^2`` on (i, j, k); rational for rational ``x``."""
    x = Quaternion.coerce(x)
    n = x.norm_sq()
    if n == 0:
        raise ZeroDivisionError("rotation by the zero quaternion")
    cols = []
    for u in UNITS[1:]:
        y = x.conj() * u * x
        cols.append((y.a1 / n, y.a2 / n, y.a3 / n))
    return tuple(tuple(cols[s][t] for s in range(3)) for t in range(3))


def rotate_phi(phi: PhiMap, x: Quaternion) -> PhiMap:
    """``Mat phi_1 = (Mat A_x)^{-1} Mat phi Mat A_x``."""
    A = np.array(rotation_matrix(x), dtype=object)
    return PhiMap(tuple(tuple(r) for r in A.T.dot(np.array(phi.matrix, dtype=object)).dot(A)))


def rotate_tensor(R: CurvatureTensor, T: np.ndarray) -> CurvatureTensor:
    """Express ``R`` in the basis given by the columns of ``T``.

    The new tensor is ``R'(e_a ^ e_b) = T^{-1} R(T e_a ^ T e_b) T``.
    """
    T = fmat(T)
    Tinv = fmat(linalg.inverse(T.tolist()))
    values = {}
    for a, b in combinations(range(DIM), 2):
        values[(a, b)] = Tinv.dot(R(T[:, a], T[:, b])).dot(T)
    return CurvatureTensor.from_pairs(values)
