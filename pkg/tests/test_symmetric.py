from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from quatholonomy import algebra
from quatholonomy.algebra import basis_change_matrix, g4, g6
from quatholonomy.curvature import bianchi_nullspace, r1_tensor
from quatholonomy.quaternion import q
from quatholonomy.symmetric import (
    ClassificationError, JacobiError, PhiMap, SymmetricPair, build_triple, canonical_lambda,
    family_tensor, holonomy_filter, lambda_polynomial, phi_from_tensor, rotate_phi,
    rotate_tensor, rotation_matrix, two_dim_tensor,
)
from quatholonomy.polyroots import evaluate


def brute_force_lambda(phi_matrix):
    """Try every eigenvalue as the normalised 1 and keep the ratio in the canonical range."""
    ev = np.linalg.eigvalsh(np.array(phi_matrix, dtype=float))
    hits = set()
    for i, e in enumerate(ev):
        if e <= 0:
            continue
        for j, f in enumerate(ev):
            if j != i:
                lam = f / e
                if -0.5 - 1e-9 <= lam < 0 or lam >= 1 - 1e-9:
                    hits.add(round(lam, 7))
    return hits


@pytest.mark.parametrize("lam, expected", [
    (Fraction(-1, 2), Fraction(-1, 2)), (Fraction(-1, 4), Fraction(-1, 4)),
    (Fraction(1, 3), Fraction(3)), (Fraction(1), Fraction(1)), (Fraction(2), Fraction(2)),
])
def test_family_canonical_lambda(lam, expected):
    inv = canonical_lambda(phi_from_tensor(family_tensor(lam)))
    assert inv.is_exact and inv.value == expected
    assert inv.triple() == (1, expected, -1 - expected)


def test_listed_lambdas_are_pairwise_distinct():
    values = [canonical_lambda(phi_from_tensor(family_tensor(x))).value
              for x in (Fraction(-1, 2), Fraction(-1, 4), Fraction(1, 3), 1, 2)]
    assert len(set(values)) == 5


def test_sign_flip_merges_cases():
    a = canonical_lambda(phi_from_tensor(family_tensor(1)), allow_sign_flip=True)
    b = canonical_lambda(phi_from_tensor(family_tensor(Fraction(-1, 2))), allow_sign_flip=True)
    assert a.value == b.value
    assert b.sign_flip_used


d_entries = st.fractions(min_value=-4, max_value=4, max_denominator=3)


@given(st.tuples(d_entries, d_entries, d_entries, d_entries, d_entries))
def test_lambda_matches_brute_force(d):
    phi = PhiMap.from_d(d)
    assume(abs(float(phi.det())) > 1e-3)
    inv = canonical_lambda(phi)
    hits = brute_force_lambda(phi.matrix)
    assert any(abs(float(inv.root) - h) < 1e-5 for h in hits)
    assert evaluate(lambda_polynomial(inv.invariant[0]), inv.root.lo) * \
        evaluate(lambda_polynomial(inv.invariant[0]), inv.root.hi) <= 0


@given(st.tuples(*[st.integers(-3, 3)] * 4), st.tuples(*[st.integers(-3, 3)] * 5))
def test_lambda_is_rotation_invariant(x, d):
    x = q(*x)
    phi = PhiMap.from_d(d)
    assume(not x.is_zero() and phi.det() != 0)
    assert canonical_lambda(rotate_phi(phi, x)).invariant == canonical_lambda(phi).invariant


def test_rotation_matrix_is_orthogonal():
    A = np.array(rotation_matrix(q(1, 2, -1, 3)), dtype=object)
    assert (A.T.dot(A) == np.eye(3, dtype=int)).all()


def test_basis_change_rotates_phi():
    x = q(1, 2, -1, 3)
    R = family_tensor(2)
    R2 = rotate_tensor(R, basis_change_matrix(x))
    assert bianchi_nullspace(g4()).contains(R2)
    expected = rotate_phi(phi_from_tensor(R), x)
    got = phi_from_tensor(R2)
    assert got.flat() == [v * x.norm_sq() for v in expected.flat()]


def test_degenerate_phi_is_rejected():
    with pytest.raises(ClassificationError, match="does not span"):
        canonical_lambda(phi_from_tensor(two_dim_tensor()))
    with pytest.raises(ValueError):
        family_tensor(0)
    with pytest.raises(ValueError):
        PhiMap(((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_symmetric_pairs_and_triples():
    for g, R in ((g4(), family_tensor(2)), (g6(), two_dim_tensor())):
        pair = SymmetricPair(g, R)
        assert pair.is_valid()
        triple = build_triple(pair, check_pair=True)
        assert triple.dim == g.dim + 8
        assert triple.sigma_is_automorphism() and triple.eta_invariant()
    h0 = algebra.get("h0")
    assert build_triple(SymmetricPair(h0, r1_tensor()), check_pair=True).dim == 15


def test_g1_tensor_fails_jacobi():
    g = algebra.g1()
    R = bianchi_nullspace(g).basis[0]
    pair = SymmetricPair(g, R)
    assert not pair.is_valid()
    with pytest.raises(JacobiError):
        build_triple(pair)


def test_holonomy_filter():
    res = holonomy_filter()
    assert res.hyper_kahler == ["g4", "g6"]
    assert res.nonzero_scalar == ["h0"]
