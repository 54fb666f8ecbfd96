from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from quatholonomy import linalg

small_ints = st.integers(min_value=-4, max_value=4)


def matrices(rows, cols):
    return st.lists(st.lists(small_ints, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(st.integers(1, 6).flatmap(lambda r: st.integers(1, 7).flatmap(lambda c: matrices(r, c))))
def test_nullspace_against_sympy(M):
    ncols = len(M[0])
    basis = linalg.nullspace(M, ncols)
    oracle = sympy.Matrix(M)
    assert len(basis) == ncols - oracle.rank()
    for v in basis:
        assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in M)
    assert linalg.rank(M, ncols) == oracle.rank()


@given(st.integers(1, 5).flatmap(lambda n: matrices(n, n)))
def test_determinant_and_inverse_against_sympy(M):
    det = linalg.determinant(M)
    assert det == Fraction(int(sympy.Matrix(M).det()))
    if det:
        inv = linalg.inverse(M)
        n = len(M)
        for i in range(n):
            for j in range(n):
                assert sum(Fraction(M[i][k]) * inv[k][j] for k in range(n)) == int(i == j)


def test_coordinates_and_span():
    basis = [[1, 0, 1], [0, 1, 1]]
    assert linalg.coordinates([2, 3, 5], basis) == [2, 3]
    assert linalg.coordinates([0, 0, 1], basis) is None
    assert linalg.span_equal(basis, [[1, 1, 2], [1, -1, 0]])
    assert not linalg.span_equal(basis, [[1, 1, 2]])
    assert linalg.in_span([3, 3, 6], basis)


def test_rref_is_canonical():
    a = linalg.rref([[2, 4, 6], [1, 1, 1]])
    b = linalg.rref([[1, 1, 1], [0, 2, 4], [1, 3, 5]])
    assert a == b


def test_intersect_with_kernel():
    basis = [[1, 0, 0], [0, 1, 0]]
    out = linalg.intersect_with_kernel(basis, [[1, 1, 7]])
    assert len(out) == 1 and out[0][0] == -out[0][1]
