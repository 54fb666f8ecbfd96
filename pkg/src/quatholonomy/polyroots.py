"""Exact real roots of rational polynomials via Sturm sequences.

Polynomials are lists of coefficients from the constant term upwards.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

__all__ = [
    "Poly", "trim", "evaluate", "derivative", "poly_divmod", "poly_gcd",
    "square_free", "sturm_sequence", "count_roots", "root_bound",
    "RealRoot", "real_roots",
]

Poly = list[Fraction]


def trim(p: Sequence) -> Poly:
    p = [Fraction(c) for c in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def evaluate(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def derivative(p: Sequence[Fraction]) -> Poly:
    return trim([k * c for k, c in enumerate(p)][1:])


def poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[Poly, Poly]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    rem = list(a)
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        f = rem[-1] / b[-1]
        quot[shift] = f
        for k, c in enumerate(b):
            rem[k + shift] -= f * c
        rem = trim(rem)
    return trim(quot), rem


def _monic(p: Poly) -> Poly:
    return [c / p[-1] for c in p] if p else p


def poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> Poly:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return _monic(a)


def square_free(p: Sequence[Fraction]) -> Poly:
    """``p / gcd(p, p')``: same real roots, all simple."""
    p = trim(p)
    g = poly_gcd(p, derivative(p))
    return _monic(poly_divmod(p, g)[0]) if len(g) > 1 else _monic(p)


def sturm_sequence(p: Sequence[Fraction]) -> list[Poly]:
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        r = poly_divmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return [s for s in seq if s]


def _sign_changes(seq: list[Poly], x: Fraction) -> int:
    signs = [v for v in (evaluate(s, x) for s in seq) if v != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def count_roots(seq: list[Poly], lo: Fraction, hi: Fraction) -> int:
    """Number of distinct roots in ``(lo, hi]`` of the first polynomial of a Sturm sequence."""
    return _sign_changes(seq, lo) - _sign_changes(seq, hi)


def root_bound(p: Sequence[Fraction]) -> Fraction:
    """Cauchy bound: every real root lies in ``(-B, B)``."""
    p = trim(p)
    return 1 + max(abs(c / p[-1]) for c in p[:-1]) if len(p) > 1 else Fraction(1)


@dataclass(frozen=True)
class RealRoot:
    """A real root, exact when rational, otherwise an isolating interval."""

    lo: Fraction
    hi: Fraction
    exact: Fraction | None = None

    @property
    def is_rational(self) -> bool:
        return self.exact is not None

    def __float__(self):
        return float(self.exact) if self.exact is not None else float((self.lo + self.hi) / 2)

    def render(self) -> str:
        if self.exact is not None:
            return _render(self.exact)
        return f"[{_render(self.lo)}, {_render(self.hi)}]"


def _render(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _integer_leading(p: Poly) -> int:
    den = 1
    for c in p:
        den = lcm(den, c.denominator)
    return abs(int(p[-1] * den))


def real_roots(p: Sequence, width: Fraction = Fraction(1, 10 ** 12)) -> list[RealRoot]:
    """All distinct real roots of ``p`` in increasing order.

    Rational roots are returned exactly.  Irrational roots come as intervals
    of width below ``width`` that contain no other root.
    """
    p = trim(p)
    if len(p) <= 1:
        return []
    sf = square_free(p)
    seq = sturm_sequence(sf)
    B = root_bound(sf)
    # a rational root u/v has v | leading coefficient of the integer form,
    # and distinct such rationals are at least 1/N^2 apart
    N = max(_integer_leading(sf), 1)
    sep = Fraction(1, 2 * N * N)

    pending = [(-B, B)]
    isolated = []
    while pending:
        lo, hi = pending.pop()
        n = count_roots(seq, lo, hi)
        if n == 0:
            continue
        if n == 1:
            isolated.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        pending.append((lo, mid))
        pending.append((mid, hi))

    out = []
    for lo, hi in sorted(isolated):
        target = min(width, sep)
        while hi - lo >= target:
            mid = (lo + hi) / 2
            if evaluate(sf, mid) == 0:
                lo = hi = mid
                break
            if count_roots(seq, lo, mid):
                hi = mid
            else:
                lo = mid
        if lo == hi:
            out.append(RealRoot(lo, hi, lo))
            continue
        if evaluate(sf, hi) == 0:
            out.append(RealRoot(hi, hi, hi))
            continue
        cand = ((lo + hi) / 2).limit_denominator(N)
        if lo < cand <= hi and evaluate(sf, cand) == 0:
            out.append(RealRoot(cand, cand, cand))
        else:
            while hi - lo >= width:
                mid = (lo + hi) / 2
                if count_roots(seq, lo, mid):
                    hi = mid
                else:
                    lo = mid
            out.append(RealRoot(lo, hi))
    return out
