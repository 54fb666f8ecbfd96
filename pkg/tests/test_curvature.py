import itertools
from fractions import Fraction

import numpy as np
import pytest
import sympy

from quatholonomy import algebra
from quatholonomy.curvature import (
    CLOSED_FORMS, CurvatureTensor, PropOneParams, a_rs_vanish, annihilated_space, berger_check,
    bianchi_nullspace, complement_space, prop1_basis, prop1_construct, r0_tensor, r1_tensor,
    restricted_space, ricci, satisfies_triple_star, scalar_curvature, section6_conditions,
    sp1_sum_space, split_nu_W,
)
from quatholonomy.quaternion import I, J, K, q
from quatholonomy.realification import MembershipError, PAIRS, is_sp1_plus_sp11


def oracle_dim(g):
    """Dense sympy rank of the Bianchi map on Lambda^2 (x) g, built column by column."""
    gens = [sympy.Matrix(M.tolist()) for M in g.basis]
    cols = []
    for a, b in itertools.combinations(range(8), 2):
        for G in gens:
            def R(u, v):
                if (u, v) == (a, b):
                    return G
                if (v, u) == (a, b):
                    return -G
                return sympy.zeros(8, 8)
            col = []
            for x, y, z in itertools.combinations(range(8), 3):
                col.extend(list(R(x, y)[:, z] + R(y, z)[:, x] + R(z, x)[:, y]))
            cols.append(col)
    M = sympy.Matrix(cols).T
    return M.shape[1] - M.rank()


@pytest.mark.parametrize("name", ["g6", "g5", "g4", "case-II"])
def test_solver_matches_sympy_oracle(name):
    g = algebra.get(name, **algebra.FAMILY_DEFAULTS.get(name, {}))
    assert bianchi_nullspace(g).dim == oracle_dim(g)


# frozen from the sympy oracle above (each took a few seconds)
ORACLE_DIMS = {"g1": 13, "sp1+g1": 14, "g4": 5, "g6": 2}

CATALOG_R_DIMS = {
    "g1": 13, "g2": 10, "g3": 7, "g4": 5, "g5": 4, "g6": 2, "h0": 1, "sp1+g1": 14,
    "sp1": 0, "sl1H": 0, "case-IV-2": 0, "R(0,i)": 0, "sl2C": 10,
    "case-I-3": 5, "case-II": 4, "case-III": 0, "case-IV-1": 0,
}


def test_frozen_oracle_dims():
    for name, dim in ORACLE_DIMS.items():
        assert bianchi_nullspace(algebra.get(name)).dim == dim


@pytest.mark.parametrize("g", algebra.catalog(), ids=lambda g: g.name)
def test_curvature_space_over_catalog(g):
    space = bianchi_nullspace(g)
    assert space.dim == CATALOG_R_DIMS[g.name]
    for T in space.basis:
        assert T.satisfies_bianchi()
        assert T.satisfies_pair_symmetry()
        assert T.is_symmetric_map()
        assert T.images_in(g)


BERGER = {"g1", "g2", "g3", "g4", "g5", "g6", "h0", "sp1+g1", "sl2C", "case-II"}


@pytest.mark.parametrize("g", algebra.catalog(), ids=lambda g: g.name)
def test_berger_verdicts(g):
    verdict = berger_check(g)
    assert verdict.is_berger == (g.name in BERGER)
    assert ("-> BERGER" in str(verdict)) == verdict.is_berger


def test_case_i3_is_not_berger():
    v = berger_check(algebra.get("case-I-3", alpha=1, beta=0))
    assert (v.dim_R, v.dim_L) == (5, 3)


@pytest.mark.parametrize("name", sorted(CLOSED_FORMS))
def test_closed_form_parametrizations(name):
    check = section6_conditions(name)
    assert check.match
    assert check.solver_dim == check.closed_form_dim == CLOSED_FORMS[name].n_free


def test_closed_form_tensors():
    for T in prop1_basis():
        assert T.satisfies_bianchi() and T.satisfies_pair_symmetry()
        assert satisfies_triple_star(T)
        assert a_rs_vanish(T)
        assert T.is_quaternion_antilinear()
        assert not any(ricci(T).flat)
    T = prop1_construct(PropOneParams(q(1, 2), q(0, 0, 3), (1, -1, 2, 0, 5)))
    assert T.images_in(algebra.g1()) and T.satisfies_bianchi()


def test_parameter_vector_roundtrip():
    v = [Fraction(n, 3) for n in range(13)]
    assert PropOneParams.from_vector(v).vector() == v


def test_restriction_and_complement_agree_on_chain():
    chain = ["g1", "g2", "g4", "g6"]
    spaces = {n: bianchi_nullspace(algebra.get(n)) for n in chain}
    for big, small in zip(chain, chain[1:]):
        g = algebra.get(small)
        assert restricted_space(spaces[big], g).same_span(spaces[small])
        assert complement_space(spaces[big], g).same_span(spaces[small])


def test_complement_inside_ambient_is_too_weak():
    # bivectors of g4 orthogonal to g6 do not see enough of R(g4)
    space = bianchi_nullspace(algebra.g4())
    assert complement_space(space, algebra.g6(), algebra.g4()).dim == 5
    assert complement_space(space, algebra.g6()).dim == 2


def test_annihilated_spaces():
    assert annihilated_space(algebra.g4()).dim == 5
    assert annihilated_space(algebra.g6()).dim == 2
    assert annihilated_space(algebra.g1()).dim == 0
    assert annihilated_space(algebra.get("h0")).dim == 1


def test_r0_and_r1():
    R0, R1 = r0_tensor(), r1_tensor()
    for R in (R0, R1):
        assert R.satisfies_bianchi() and R.satisfies_pair_symmetry() and R.is_symmetric_map()
        assert all(is_sp1_plus_sp11(M) for M in R.images)
    assert scalar_curvature(R0) == 32
    assert scalar_curvature(R1) == -32
    nu, W = split_nu_W(R1)
    assert nu == -1
    assert not any(ricci(W).flat)
    nu, W = split_nu_W(R0 * 3)
    assert nu == 3 and W.is_zero()


def test_split_rejects_non_curvature():
    bad = CurvatureTensor.from_pairs({(0, 1): algebra.ab(I)})
    with pytest.raises(MembershipError):
        split_nu_W(bad)


def test_sp1_direct_sum():
    res = sp1_sum_space()
    assert res.r1_in_h0 and res.h0_is_line_r1 and res.sum_matches


def test_tensor_arithmetic_and_call():
    T = prop1_basis()[4]
    assert (T + T) == T * 2 and (T - T).is_zero() and -(-T) == T
    e = [np.eye(8, dtype=int)[n] for n in range(8)]
    for k, (a, b) in enumerate(PAIRS):
        assert np.array_equal(T(e[a], e[b]), T.images[k])
        assert np.array_equal(T(e[b], e[a]), -T.images[k])
