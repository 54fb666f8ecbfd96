from fractions import Fraction

import numpy as np
import pytest

from quatholonomy import algebra
from quatholonomy.algebra import (
    ClosureError, ab, basis_change_matrix, case_ii, case_iii, case_iv1, catalog, g1, g4, g6,
    hp_line, hq_line, normalize_basis, preserves, shift_matrix, sl2c, transport,
)
from quatholonomy.quaternion import I, J, K, ONE, ZERO, q
from quatholonomy.realification import QUATERNIONIC, SPLIT, commutator, is_so44

CATALOG_DIMS = {
    "g1": 7, "g2": 6, "g3": 5, "g4": 3, "g5": 4, "g6": 2, "h0": 7, "sp1+g1": 10,
    "sp1": 3, "sl1H": 3, "case-IV-2": 4, "R(0,i)": 1, "sl2C": 6,
    "case-I-3": 4, "case-II": 4, "case-III": 3, "case-IV-1": 3,
}


def test_catalog_dimensions():
    assert {g.name: g.dim for g in catalog()} == CATALOG_DIMS


@pytest.mark.parametrize("g", catalog(), ids=lambda g: g.name)
def test_catalog_entries_are_so44_subalgebras(g):
    for M in g.basis:
        assert is_so44(M)
    for A in g.basis:
        for B in g.basis:
            assert g.contains(commutator(A, B))


def test_chain_of_subalgebras():
    names = ["g6", "g4", "g2", "g1", "sp1+g1"]
    for small, big in zip(names, names[1:]):
        assert algebra.get(small).is_subalgebra_of(algebra.get(big))
    assert algebra.get("g5").is_subalgebra_of(algebra.get("g1"))
    assert algebra.get("g3").is_subalgebra_of(algebra.get("g1"))
    assert not algebra.get("g1").is_subalgebra_of(algebra.get("g2"))


def test_stabilizer_of_isotropic_line():
    for name in ("g1", "g2", "g3", "g4", "g5", "g6"):
        g = algebra.get(name)
        assert preserves(g, hp_line())
        assert not preserves(g, hq_line())
    W = hp_line()
    assert W.isotropic and W.dim == 4
    assert W.quaternionic_flags == (True, True, True)


def test_sp1_commutes_with_g1():
    for A in algebra.get("sp1").basis:
        for B in g1().basis:
            assert not any(commutator(A, B).flat)


def test_family_closure():
    assert case_ii(0, 1, 1).dim == 4
    assert case_ii(1, 0, 0).dim == 4
    with pytest.raises(ClosureError):
        case_ii(1, 1, 1)
    for a, b in [(1, 0), (0, 1), (2, -3)]:
        assert case_iii(a, b).dim == 3
    assert case_iv1(0, 1).dim == 3
    with pytest.raises(ClosureError):
        case_iv1(1, 0)
    with pytest.raises(ValueError):
        algebra.get("case-I-3", alpha=0, beta=0)


def test_case_ii_at_gamma_zero_is_g5():
    assert case_ii(0, 1, 0).same_span(algebra.get("g5"))


def test_get_errors():
    with pytest.raises(KeyError):
        algebra.get("nope")
    with pytest.raises(ValueError):
        algebra.get("g1", alpha=1)


@pytest.mark.parametrize("presentation, structure", [("split", SPLIT), ("quaternionic", QUATERNIONIC)])
def test_sl2c_commutes_with_its_structure(presentation, structure):
    g = sl2c(presentation)
    assert g.dim == 6
    for M in g.basis:
        assert is_so44(M)
        for Ia in structure.ops:
            assert not any(commutator(M, Ia).flat)


def test_closure_error_names_bracket():
    with pytest.raises(ClosureError, match="leaves the span"):
        algebra.Subalgebra("bad", (ab(I), ab(J)), {}, "", "quaternionic")


@pytest.mark.parametrize("a", [I, J, K, q(0, 0, Fraction(3, 5), Fraction(4, 5)), q(0, Fraction(2, 3), Fraction(1, 3), Fraction(-2, 3))])
def test_normalize_imaginary_unit(a):
    x = normalize_basis(a).x
    assert x * a == I * x
    T = basis_change_matrix(x)
    assert np.array_equal(transport(ab(a), T), ab(I))
    assert np.array_equal(transport(ab(ZERO, a), T), ab(ZERO, I))


def test_normalize_examples():
    assert normalize_basis(J).x == q(0, 1, 1)
    assert normalize_basis(J).norm_sq == 2
    res = normalize_basis(K, "lemma-4")
    assert res.x == q(1, -1)
    T = basis_change_matrix(res.x)
    assert np.array_equal(transport(ab(ZERO, K), T), ab(ZERO, J))
    assert np.array_equal(transport(ab(ZERO, I), T), ab(ZERO, I))
    with pytest.raises(ValueError):
        normalize_basis(q(1, 1))


def test_shift_keeps_g4_elements():
    S = shift_matrix(I)
    for M in g4().basis:
        assert np.array_equal(transport(M, S), M)


def test_quaternionic_structure_in_h0():
    h0 = algebra.get("h0")
    for Ia in QUATERNIONIC.ops:
        assert h0.contains(Ia)
    assert not g6().contains(QUATERNIONIC.I1)
