from math import comb

import pytest

from quatholonomy import linalg
from quatholonomy.algebra import sl2c_block, sp4r_block
from quatholonomy.prolongation import first_prolongation


def test_sp4r_prolongation_is_cubic_forms():
    # sp(4,R)^(1) is the space of cubic forms on R^4
    assert len(sp4r_block()) == 10
    assert first_prolongation(sp4r_block()).dim == comb(4 + 2, 3)


def test_sl2c_prolongation():
    # frozen from a sympy dense-rank computation of the same linear system
    assert len(sl2c_block()) == 6
    assert first_prolongation(sl2c_block()).dim == 8


def test_trivial_algebra():
    assert first_prolongation([]).dim == 0


@pytest.mark.parametrize("k", range(10))
def test_lines(k):
    # S(x) = f(x) A with f(x) A y = f(y) A x forces f = 0 once rank A >= 2
    A = sp4r_block()[k]
    expected = 1 if linalg.rank(A.tolist(), 4) == 1 else 0
    assert first_prolongation([A]).dim == expected


def test_generic_rank_two_line():
    A = sum(sp4r_block()[1:], sp4r_block()[0])
    assert linalg.rank(A.tolist(), 4) >= 2
    assert first_prolongation([A]).dim == 0


def test_prolongation_elements_are_symmetric():
    P = first_prolongation(sl2c_block())
    for S in P.basis[:3]:
        for a in range(P.n):
            for b in range(P.n):
                assert (S[a][:, b] == S[b][:, a]).all()
