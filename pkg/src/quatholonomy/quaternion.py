"""Exact quaternions and 2x2 quaternionic matrices acting on H^{1,1}.

Vectors of H^{1,1} are stored as columns of *left* coordinates,
``X = X_1 p + X_2 q``.  A quaternionic matrix ``A`` defines the H-linear map

    Op(A) X = (X^t A^t)^t,   i.e.   (Op(A) X)_t = sum_l X_l * A[t][l],

so coordinates multiply matrix entries from the left.  Composition follows
``Mat(f o g) = (Mat(g)^t Mat(f)^t)^t``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Quaternion", "QuatOpMatrix", "ONE", "I", "J", "K", "ZERO", "UNITS",
    "q", "ab_pair", "op_apply", "op_compose", "op_bracket",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Quaternion:
    """``a0 + a1 i + a2 j + a3 k`` with rational coefficients."""

    a0: Fraction = Fraction(0)
    a1: Fraction = Fraction(0)
    a2: Fraction = Fraction(0)
    a3: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a0", "a1", "a2", "a3"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    @classmethod
    def coerce(cls, x) -> "Quaternion":
        if isinstance(x, Quaternion):
            return x
        return cls(_frac(x))

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a0, self.a1, self.a2, self.a3)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        o = Quaternion.coerce(other)
        return Quaternion(self.a0 + o.a0, self.a1 + o.a1, self.a2 + o.a2, self.a3 + o.a3)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.a0, -self.a1, -self.a2, -self.a3)

    def __sub__(self, other):
        return self + (-Quaternion.coerce(other))

    def __rsub__(self, other):
        return Quaternion.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            s = _frac(other)
            return Quaternion(self.a0 * s, self.a1 * s, self.a2 * s, self.a3 * s)
        a0, a1, a2, a3 = self.coeffs
        b0, b1, b2, b3 = other.coeffs
        return Quaternion(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )

    def __rmul__(self, other):
        # scalars commute with quaternions
        return self * other

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            return self * other.inverse()
        s = _frac(other)
        return Quaternion(self.a0 / s, self.a1 / s, self.a2 / s, self.a3 / s)

    def conj(self) -> "Quaternion":
        return Quaternion(self.a0, -self.a1, -self.a2, -self.a3)

    def real_part(self) -> Fraction:
        return self.a0

    def im_part(self) -> "Quaternion":
        return Quaternion(0, self.a1, self.a2, self.a3)

    def norm_sq(self) -> Fraction:
        return self.a0 ** 2 + self.a1 ** 2 + self.a2 ** 2 + self.a3 ** 2

    def inverse(self) -> "Quaternion":
        n = self.norm_sq()
        if n == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return self.conj() / n

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_imaginary(self) -> bool:
        return self.a0 == 0

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        parts = []
        for c, unit in zip(self.coeffs, ("", "i", "j", "k")):
            if c == 0:
                continue
            mag = abs(c)
            txt = unit if (mag == 1 and unit) else f"{mag}{unit}"
            parts.append(("-" if c < 0 else "+") + txt)
        if not parts:
            return "0"
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s


def q(a0=0, a1=0, a2=0, a3=0) -> Quaternion:
    """Shorthand constructor; accepts ints, Fractions or strings like ``"1/2"``."""
    return Quaternion(Fraction(a0), Fraction(a1), Fraction(a2), Fraction(a3))


ZERO = q()
ONE = q(1)
I = q(0, 1)
J = q(0, 0, 1)
K = q(0, 0, 0, 1)
# I_0 = 1, I_1 = i, I_2 = j, I_3 = k
UNITS = (ONE, I, J, K)


@dataclass(frozen=True)
class QuatOpMatrix:
    """A 2x2 quaternionic matrix, always read through the Op convention."""

    entries: tuple[tuple[Quaternion, Quaternion], tuple[Quaternion, Quaternion]]

    def __post_init__(self):
        rows = tuple(tuple(Quaternion.coerce(x) for x in row) for row in self.entries)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("QuatOpMatrix needs a 2x2 array")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def of(cls, a11, a12, a21, a22) -> "QuatOpMatrix":
        return cls(((a11, a12), (a21, a22)))

    @classmethod
    def identity(cls) -> "QuatOpMatrix":
        return cls.of(ONE, ZERO, ZERO, ONE)

    @classmethod
    def zero(cls) -> "QuatOpMatrix":
        return cls.of(ZERO, ZERO, ZERO, ZERO)

    def __getitem__(self, idx):
        t, l = idx
        return self.entries[t][l]

    def __add__(self, other):
        return QuatOpMatrix(tuple(
            tuple(self[t, l] + other[t, l] for l in range(2)) for t in range(2)))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, s) -> "QuatOpMatrix":
        """Multiply every entry by a real scalar."""
        return QuatOpMatrix(tuple(tuple(x * s for x in row) for row in self.entries))

    def is_zero(self) -> bool:
        return all(x.is_zero() for row in self.entries for x in row)

    def as_ab_pair(self) -> tuple[Quaternion, Quaternion] | None:
        """Return ``(a, b)`` if the matrix is ``((a, b), (0, -conj a))`` with ``b`` imaginary."""
        a, b = self[0, 0], self[0, 1]
        if self[1, 0].is_zero() and self[1, 1] == -a.conj() and b.is_imaginary():
            return a, b
        return None

    def __str__(self):
        return "[[{}, {}], [{}, {}]]".format(self[0, 0], self[0, 1], self[1, 0], self[1, 1])


def ab_pair(a, b) -> QuatOpMatrix:
    """The element ``(a, b) = ((a, b), (0, -conj a))`` of the stabilizer of Hp.

    ``b`` must be purely imaginary.
    """
    a = Quaternion.coerce(a)
    b = Quaternion.coerce(b)
    if not b.is_imaginary():
        raise ValueError(f"b must be imaginary, got {b}")
    return QuatOpMatrix.of(a, b, ZERO, -a.conj())


def op_apply(A: QuatOpMatrix, X: Sequence[Quaternion]) -> tuple[Quaternion, Quaternion]:
    """Apply ``Op(A)`` to a column of left coordinates."""
    X = [Quaternion.coerce(x) for x in X]
    if len(X) != 2:
        raise ValueError("expected a coordinate column of length 2")
    return tuple(X[0] * A[t, 0] + X[1] * A[t, 1] for t in range(2))


def op_compose(A: QuatOpMatrix, B: QuatOpMatrix) -> QuatOpMatrix:
    """Matrix of ``Op(A) o Op(B)``."""
    return QuatOpMatrix(tuple(
        tuple(sum((B[m, l] * A[t, m] for m in range(2)), ZERO) for l in range(2))
        for t in range(2)))


def op_bracket(A: QuatOpMatrix, B: QuatOpMatrix) -> QuatOpMatrix:
    return op_compose(A, B) - op_compose(B, A)


def quaternion_sum(xs: Iterable[Quaternion]) -> Quaternion:
    return sum(xs, ZERO)
