from fractions import Fraction

from hypothesis import given

from quatholonomy.quaternion import (
    I, J, K, ONE, ZERO, QuatOpMatrix, ab_pair, op_apply, op_bracket, op_compose, q,
)

from conftest import imaginary, quaternions


def test_multiplication_table():
    assert I * J == K and J * K == I and K * I == J
    assert J * I == -K
    assert I * I == J * J == K * K == -ONE


def test_conjugate_is_anti_automorphism_example():
    x, y = q(1, 1), J
    assert (x * y).conj() == y.conj() * x.conj()
    assert (x * y).conj() == q(0, 0, -1, -1)


def test_norm():
    assert q(1, 1, 1, 1).norm_sq() == 4


@given(quaternions, quaternions)
def test_conj_reverses_products(x, y):
    assert (x * y).conj() == y.conj() * x.conj()
    assert x.conj().conj() == x
    assert x.im_part().im_part() == x.im_part()
    assert x.conj() * x == q(x.norm_sq())


@given(quaternions)
def test_inverse(x):
    if not x.is_zero():
        assert x * x.inverse() == ONE


def test_op_apply_examples():
    x = q(2, -1, 3, 1)
    assert op_apply(QuatOpMatrix.of(I, ZERO, ZERO, I), (x, ZERO)) == (x * I, ZERO)
    assert op_apply(QuatOpMatrix.of(ZERO, I, ZERO, ZERO), (ZERO, ONE)) == (I, ZERO)
    assert op_apply(QuatOpMatrix.identity(), (x, I)) == (x, I)


@given(quaternions, quaternions, quaternions, quaternions, quaternions, quaternions, quaternions,
       quaternions, quaternions, quaternions)
def test_compose_matches_application(a, b, c, d, e, f, g, h, x1, x2):
    A = QuatOpMatrix.of(a, b, c, d)
    B = QuatOpMatrix.of(e, f, g, h)
    X = (x1, x2)
    assert op_apply(op_compose(A, B), X) == op_apply(A, op_apply(B, X))


@given(quaternions, quaternions, quaternions, quaternions, quaternions, quaternions)
def test_op_is_left_linear(a, b, c, d, x, s):
    # coordinates are left coordinates, so Op(A) commutes with left scalars
    A = QuatOpMatrix.of(a, b, c, d)
    y1, y2 = op_apply(A, (x, ONE))
    assert op_apply(A, (s * x, s)) == (s * y1, s * y2)


def test_bracket_examples():
    # [(a,0),(0,b)] = (0, 2 Im(b a)); for a = i, b = j this is (0, -2k)
    assert op_bracket(ab_pair(I, ZERO), ab_pair(ZERO, J)) == ab_pair(ZERO, q(0, 0, 0, -2))
    assert op_bracket(ab_pair(I, ZERO), ab_pair(J, ZERO)) == ab_pair(q(0, 0, 0, -2), ZERO)
    A = QuatOpMatrix.of(q(1, 2), I, J, q(0, 0, 0, 3))
    assert op_bracket(A, A).is_zero()


@given(quaternions, imaginary, quaternions, imaginary)
def test_ab_pairs_closed_under_bracket(a1, b1, a2, b2):
    C = op_bracket(ab_pair(a1, b1), ab_pair(a2, b2))
    pair = C.as_ab_pair()
    assert pair is not None
    a, b = pair
    assert a == a2 * a1 - a1 * a2
    assert b == b2 * a1 - a2.conj() * b1 - b1 * a2 + a1.conj() * b2
