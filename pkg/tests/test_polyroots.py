from fractions import Fraction

import numpy as np
from hypothesis import given, strategies as st

from quatholonomy.polyroots import (
    count_roots, derivative, evaluate, poly_divmod, poly_gcd, real_roots, root_bound,
    square_free, sturm_sequence,
)


def from_roots(roots):
    p = [Fraction(1)]
    for r in roots:
        p = [Fraction(0)] + p
        for n in range(len(p) - 1):
            p[n] -= Fraction(r) * p[n + 1]
    return p


def test_mixed_roots():
    # (x - 1/3)^2 (x + 2) (x^2 - 2)
    p = from_roots([Fraction(1, 3), Fraction(1, 3), -2])
    p = [a - 2 * b for a, b in zip([Fraction(0)] * 2 + p, p + [Fraction(0)] * 2)]
    roots = real_roots(p)
    assert len(roots) == 4
    exact = [r.exact for r in roots if r.is_rational]
    assert exact == [-2, Fraction(1, 3)]
    irrational = [r for r in roots if not r.is_rational]
    assert len(irrational) == 2
    for r, target in zip(irrational, [-np.sqrt(2), np.sqrt(2)]):
        assert r.lo <= target <= r.hi
        assert r.hi - r.lo <= Fraction(1, 10 ** 12)
        assert r.render().startswith("[")
    assert roots[2].render() == "1/3"


def test_no_real_roots():
    assert real_roots([1, 0, 1]) == []


def test_arithmetic():
    a = from_roots([1, 2, 3])
    b = from_roots([2, 5])
    qt, r = poly_divmod(a, b)
    back = [Fraction(0)] * len(a)
    for i, x in enumerate(qt):
        for j, y in enumerate(b):
            back[i + j] += x * y
    for i, x in enumerate(r):
        back[i] += x
    assert back == a
    assert poly_gcd(a, b) == from_roots([2])
    assert square_free(from_roots([1, 1, 4])) == from_roots([1, 4])
    assert derivative([5, 3, 2]) == [3, 4]
    assert evaluate(a, 2) == 0


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=5))
def test_rational_roots_found_exactly(roots):
    p = from_roots(roots)
    found = real_roots(p)
    assert [r.exact for r in found] == sorted(set(Fraction(x) for x in roots))
    assert all(abs(Fraction(x)) <= root_bound(p) for x in roots)


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=6).filter(lambda c: c[-1] != 0))
def test_against_numpy_roots(coeffs):
    found = real_roots(coeffs)
    reference = sorted({round(z.real, 6) for z in np.roots(coeffs[::-1]) if abs(z.imag) < 1e-7})
    # numpy can split a multiple root into a tiny complex pair, so compare only when it saw all roots
    seq = sturm_sequence(square_free(coeffs))
    bound = root_bound(coeffs)
    assert len(found) == count_roots(seq, -bound - 1, bound + 1)
    if len(reference) == len(found):
        for r, x in zip(found, reference):
            assert abs(float(r) - x) < 1e-5
