"""The reproduction checks, one per acceptance criterion, and the report they feed."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import __version__, algebra, linalg
from .algebra import Subalgebra, basis_change_matrix
from .curvature import (
    CurvatureSpace, a_rs_vanish, berger_check, bianchi_nullspace, bianchi_solve,
    complement_space, prop1_basis, r0_tensor, r1_tensor, restricted_space,
    ricci, satisfies_triple_star, scalar_curvature, section6_conditions,
    span_of_images, split_nu_W, sp1_sum_space, CLOSED_FORMS,
)
from .io import render_rational
from .prolongation import first_prolongation
from .quaternion import I, J, K, ONE, ZERO, Quaternion, q
from .realification import (
    DIM, QUATERNIONIC, SPLIT, bivector_of, commutator, endo_to_bivector, fmat,
    is_so44, zeros,
)
from .symmetric import (
    PhiMap, SymmetricPair, build_triple, canonical_lambda, family_tensor,
    holonomy_filter, phi_from_tensor, rotate_phi, rotate_tensor,
)

__all__ = ["CheckRecord", "VerificationReport", "CHECKS", "run_check", "run_checks", "rational_grid"]

EXPECTED_DIMS = {"g1": 13, "g2": 10, "g3": 7, "g4": 5, "g5": 4, "g6": 2, "h0": 1, "sp1+g1": 14}
BERGER = ("g1", "g2", "g3", "g4", "g5", "g6", "h0", "sp1+g1")
LAMBDAS = (Fraction(-1, 2), Fraction(-1, 4), Fraction(1, 3), Fraction(1), Fraction(2))
LABEL_INDEX = {lab: n for n, lab in enumerate(("p", "ip", "jp", "kp", "q", "iq", "jq", "kq"))}


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    claim: str
    expected: object
    computed: object
    status: str

    def to_dict(self) -> dict:
        return {"check_id": self.check_id, "claim": self.claim, "expected": self.expected,
                "computed": self.computed, "status": self.status}


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckRecord, ...]
    version: str = __version__
    grid_size: int = 2

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "grid_size": self.grid_size,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_dict() for c in self.checks],
        }


def rational_grid(n: int) -> list[Fraction]:
    """All rationals ``u/d`` with ``|u| <= n`` and ``1 <= d <= n``, sorted."""
    return sorted({Fraction(u, d) for u in range(-n, n + 1) for d in range(1, n + 1)})


class _Context:
    """Caches solved spaces shared between checks."""

    def __init__(self, grid_size: int):
        self.grid_size = grid_size
        self._spaces: dict[str, CurvatureSpace] = {}

    def space(self, name: str) -> CurvatureSpace:
        if name not in self._spaces:
            self._spaces[name] = bianchi_nullspace(algebra.get(name))
        return self._spaces[name]

    def grid(self) -> list[Fraction]:
        return rational_grid(self.grid_size)


def _result(expected, computed, ok: bool):
    return expected, computed, ok


# --- 1 -------------------------------------------------------------------------

def check_dimensions(ctx: _Context):
    dims = {name: ctx.space(name).dim for name in EXPECTED_DIMS}
    closed = {name: section6_conditions(name, ctx.space(name), strict=False).match for name in CLOSED_FORMS}
    sums = sp1_sum_space()
    computed = {"dims": dims, "closed_form_match": closed,
                "h0_is_line_R1": sums.h0_is_line_r1, "sp1+g1_is_R1_plus_g1": sums.sum_matches}
    expected = {"dims": EXPECTED_DIMS, "closed_form_match": {n: True for n in CLOSED_FORMS},
                "h0_is_line_R1": True, "sp1+g1_is_R1_plus_g1": True}
    return _result(expected, computed, computed == expected)


# --- 2 -------------------------------------------------------------------------

def check_zero_spaces(ctx: _Context):
    grid = ctx.grid()
    max_dim = 0
    closed = 0
    points = 0
    for alpha in grid:
        for beta in grid:
            gens = [algebra.ab(I), algebra.ab(J, q(0, 0, alpha, -beta)), algebra.ab(K, q(0, 0, beta, alpha))]
            max_dim = max(max_dim, len(bianchi_solve(gens)))
            points += 1
            try:
                algebra.case_iv1(alpha, beta)
                closed += 1
            except algebra.ClosureError:
                pass
    diag = ctx.space("case-IV-2").dim
    computed = {"case-IV-1 grid points": points, "case-IV-1 closed points": closed,
                "case-IV-1 max dim": max_dim, "case-IV-2 dim": diag}
    expected = {"case-IV-1 grid points": points, "case-IV-1 closed points": closed,
                "case-IV-1 max dim": 0, "case-IV-2 dim": 0}
    return _result(expected, computed, computed == expected)


# --- 3 -------------------------------------------------------------------------

def _family_members(name: str, grid: list[Fraction]) -> list[Subalgebra]:
    out = []
    for alpha in grid:
        for beta in grid:
            if name == "case-I-3" and alpha == 0 and beta == 0:
                continue
            try:
                out.append(algebra.get(name, alpha=alpha, beta=beta))
            except algebra.ClosureError:
                continue
    return out


def check_berger_table(ctx: _Context):
    computed = {}
    expected = {}
    for name in BERGER:
        computed[name] = berger_check(algebra.get(name), ctx.space(name)).is_berger
        expected[name] = True
    for name in ("R(0,i)", "case-IV-2"):
        computed[name] = berger_check(algebra.get(name), ctx.space(name)).is_berger
        expected[name] = False
    grid = ctx.grid()
    for name in ("case-I-3", "case-III", "case-IV-1"):
        members = _family_members(name, grid)
        key = f"{name} ({len(members)} grid members)"
        computed[key] = any(berger_check(g).is_berger for g in members)
        expected[key] = False
    # the image of R(g) for alpha + beta i = 1 + i is Im H, not g
    g = algebra.case_i3(1, 1)
    L = span_of_images(bianchi_nullspace(g))
    computed["case-I-3 (1,1) image is Im H"] = linalg.span_equal(L, algebra.g4().flat_basis(), DIM * DIM)
    expected["case-I-3 (1,1) image is Im H"] = True
    return _result(expected, computed, computed == expected)


# --- 4 -------------------------------------------------------------------------

def check_prop1(ctx: _Context):
    space = ctx.space("g1")
    closed = prop1_basis()
    computed = {
        "solver dim": space.dim,
        "parametrization rank": linalg.rank([T.flat() for T in closed]),
        "same span": space.same_span(closed),
        "triple-star relations": all(satisfies_triple_star(T) for T in space.basis),
        "A_rs = 0": all(a_rs_vanish(T) for T in space.basis),
    }
    expected = {"solver dim": 13, "parametrization rank": 13, "same span": True,
                "triple-star relations": True, "A_rs = 0": True}
    return _result(expected, computed, computed == expected)


# --- 5 -------------------------------------------------------------------------

SP11_TYPES = ("g1", "g2", "g3", "g4", "g5", "g6")
CHAIN = (("g2", "g1"), ("g4", "g2"), ("g6", "g4"))


def check_identities(ctx: _Context):
    computed = {}
    for name in EXPECTED_DIMS:
        basis = ctx.space(name).basis
        computed[f"{name} pair symmetry"] = all(T.satisfies_pair_symmetry() for T in basis)
        computed[f"{name} symmetric map"] = all(T.is_symmetric_map() for T in basis)
        if name in SP11_TYPES:
            computed[f"{name} quaternion antilinear"] = all(T.is_quaternion_antilinear() for T in basis)
    for small, big in CHAIN:
        g = algebra.get(small)
        computed[f"restriction {small} in {big}"] = restricted_space(ctx.space(big), g).same_span(ctx.space(small))
        computed[f"complement {small} in {big}"] = complement_space(ctx.space(big), g).same_span(ctx.space(small))
    expected = {k: True for k in computed}
    return _result(expected, computed, computed == expected)


# --- 6 -------------------------------------------------------------------------

def check_filter(ctx: _Context):
    result = holonomy_filter()
    computed = {"hyper-Kahler": result.hyper_kahler, "nonzero scalar": result.nonzero_scalar}
    expected = {"hyper-Kahler": ["g4", "g6"], "nonzero scalar": ["h0"]}
    return _result(expected, computed, computed == expected)


# --- 7 -------------------------------------------------------------------------

def _random_quaternion(rng: random.Random) -> Quaternion:
    while True:
        x = q(*(rng.randint(-9, 9) for _ in range(4)))
        if not x.is_zero():
            return x


def check_lambda(ctx: _Context):
    rng = random.Random(20240607)
    g4 = algebra.g4()
    jacobi = True
    invariant = True
    canon = {}
    for lam in LAMBDAS:
        R = family_tensor(lam)
        try:
            build_triple(SymmetricPair(g4, R), check_pair=True)
        except ValueError:
            jacobi = False
        phi = phi_from_tensor(R)
        base = canonical_lambda(phi)
        canon[render_rational(lam)] = base.render()
        for n in range(20):
            x = _random_quaternion(rng)
            scale = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            moved = rotate_phi(phi, x)
            moved = PhiMap(tuple(tuple(v * scale for v in row) for row in moved.matrix))
            if canonical_lambda(moved) != base:
                invariant = False
        # the same through the tensor itself, for one basis change
        x = _random_quaternion(rng)
        if canonical_lambda(phi_from_tensor(rotate_tensor(R, basis_change_matrix(x)))) != base:
            invariant = False
    separated = len(set(canon.values())) == len(LAMBDAS)
    det_ok = True
    for lam in ctx.grid():
        phi = PhiMap.from_d((1, 0, 0, lam, 0))
        if phi.det() != -lam * (1 + lam):
            det_ok = False
        if (phi.det() == 0) != (lam in (0, -1)):
            det_ok = False
        if lam != 0:
            spans = linalg.span_equal(span_of_images([family_tensor(lam)]), g4.flat_basis(), DIM * DIM)
            if spans != (lam != -1):
                det_ok = False
    computed = {"jacobi": jacobi, "invariant": invariant, "separated": separated,
                "det vanishes exactly at 0, -1": det_ok, "canonical": canon}
    expected = {"jacobi": True, "invariant": True, "separated": True,
                "det vanishes exactly at 0, -1": True, "canonical": canon}
    return _result(expected, computed, computed == expected and separated)


# --- 8 -------------------------------------------------------------------------

def check_ricci(ctx: _Context):
    rng = random.Random(7)
    R0 = r0_tensor()
    R1 = r1_tensor()
    nu0, W0 = split_nu_W(R0)
    space = ctx.space("g1")
    ricci_flat = all(not any(ricci(T).flat) for T in space.basis)
    nu1 = scalar_curvature(R1) / 32
    recovered = True
    for _ in range(5):
        c = Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 9))
        Rp = space.combination([rng.randint(-5, 5) for _ in range(space.dim)])
        nu, W = split_nu_W(R1 * c + Rp)
        if nu != c * nu1 or any(ricci(W).flat):
            recovered = False
    computed = {"scal(R0)": render_rational(scalar_curvature(R0)), "nu(R0)": render_rational(nu0),
                "W(R0) = 0": W0.is_zero(), "R(g1) Ricci-flat": ricci_flat,
                "R1 coefficient recovered": recovered}
    expected = {"scal(R0)": "32/1", "nu(R0)": "1/1", "W(R0) = 0": True, "R(g1) Ricci-flat": True,
                "R1 coefficient recovered": True}
    return _result(expected, computed, computed == expected)


# --- 9 -------------------------------------------------------------------------

def check_prolongation(ctx: _Context):
    sp4 = algebra.sp4r_block()
    rng = random.Random(11)
    samples = 0
    zero = True
    while samples < 20:
        A = sum((M * rng.randint(-3, 3) for M in sp4), fmat(np.zeros((4, 4), dtype=int)))
        if linalg.rank([list(r) for r in A]) < 2:
            continue
        samples += 1
        if first_prolongation([A]).dim != 0:
            zero = False
    computed = {"sp(4,R)": first_prolongation(sp4).dim,
                "sl(2,C) nonzero": first_prolongation(algebra.sl2c_block()).dim > 0,
                "random lines vanish": zero}
    expected = {"sp(4,R)": 20, "sl(2,C) nonzero": True, "random lines vanish": True}
    return _result(expected, computed, computed == expected)


# --- 10 ------------------------------------------------------------------------

def block_display(a0, a1, a2, a3, b1, b2, b3) -> np.ndarray:
    """The 8x8 real matrix of the stabilizer element, entry by entry."""
    A = [[a0, -a1, -a2, -a3], [a1, a0, a3, -a2], [a2, -a3, a0, a1], [a3, a2, -a1, a0]]
    B = [[0, -b1, -b2, -b3], [b1, 0, b3, -b2], [b2, -b3, 0, b1], [b3, b2, -b1, 0]]
    D = [[-a0, -a1, -a2, -a3], [a1, -a0, a3, -a2], [a2, -a3, -a0, a1], [a3, a2, -a1, -a0]]
    Z = [[0] * 4 for _ in range(4)]
    return fmat([ra + rb for ra, rb in zip(A, B)] + [rz + rd for rz, rd in zip(Z, D)])


BIVECTOR_GROUPS = {
    "a0": [(-1, "p", "q"), (-1, "ip", "iq"), (-1, "jp", "jq"), (-1, "kp", "kq")],
    "a1": [(1, "p", "iq"), (-1, "ip", "q"), (1, "kp", "jq"), (-1, "jp", "kq")],
    "a2": [(-1, "jp", "q"), (1, "p", "jq"), (-1, "kp", "iq"), (1, "ip", "kq")],
    "a3": [(-1, "kp", "q"), (1, "jp", "iq"), (-1, "ip", "jq"), (1, "p", "kq")],
    "b1": [(1, "p", "ip"), (-1, "jp", "kp")],
    "b2": [(1, "p", "jp"), (1, "ip", "kp")],
    "b3": [(1, "p", "kp"), (-1, "ip", "jp")],
}


def _unit_pair(key: str) -> tuple[Quaternion, Quaternion]:
    units = {"0": ONE, "1": I, "2": J, "3": K}
    return (units[key[1]], ZERO) if key[0] == "a" else (ZERO, units[key[1]])


def check_structure(ctx: _Context):
    rng = random.Random(3)
    display = True
    for _ in range(10):
        c = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(7)]
        M = algebra.ab(q(*c[:4]), q(0, *c[4:]))
        if not np.array_equal(M, block_display(*c)):
            display = False
    groups = {}
    for key, terms in BIVECTOR_GROUPS.items():
        expected = bivector_of(*((s, LABEL_INDEX[u], LABEL_INDEX[v]) for s, u, v in terms))
        groups[key] = endo_to_bivector(algebra.ab(*_unit_pair(key))) == expected
    sl = algebra.sl2c("split")
    split_ok = (SPLIT.relations_hold()
                and all(is_so44(M) for M in sl.basis)
                and all(not any(commutator(M, Ia).flat) for M in sl.basis for Ia in SPLIT.ops))
    computed = {"block display": display, "bivector groups": groups, "split structure algebra": split_ok}
    expected = {"block display": True, "bivector groups": {k: True for k in BIVECTOR_GROUPS},
                "split structure algebra": True}
    return _result(expected, computed, computed == expected)


CHECKS: tuple[tuple[str, str, Callable], ...] = (
    ("AC1-dimension-table", "dimensions of the curvature spaces of g1..g6, h0, sp1+g1", check_dimensions),
    ("AC2-zero-spaces", "case IV families carry no curvature tensors", check_zero_spaces),
    ("AC3-berger-table", "Berger verdicts for the catalog and the excluded families", check_berger_table),
    ("AC4-closed-form", "closed-form parametrization of the curvature of g1", check_prop1),
    ("AC5-identities", "pair symmetry, symmetric map, antilinearity and subalgebra criteria", check_identities),
    ("AC6-holonomy-filter", "holonomy algebras of symmetric spaces", check_filter),
    ("AC7-lambda", "lambda family: Jacobi, invariance and separation", check_lambda),
    ("AC8-ricci", "scalar curvature of the projective model and the nu/W split", check_ricci),
    ("AC9-prolongation", "first prolongations of sp(4,R), sl(2,C) and lines", check_prolongation),
    ("AC10-structure", "block display, bivector table and the split structure", check_structure),
)


def _jsonable(x):
    if isinstance(x, Fraction):
        return render_rational(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def run_check(check_id: str, grid_size: int = 2, ctx: _Context | None = None) -> CheckRecord:
    ctx = ctx or _Context(grid_size)
    for cid, claim, fn in CHECKS:
        if cid == check_id:
            try:
                expected, computed, ok = fn(ctx)
            except Exception as exc:  # a crash is a failed check, not a crashed report
                return CheckRecord(cid, claim, None, f"error: {type(exc).__name__}: {exc}", "fail")
            return CheckRecord(cid, claim, _jsonable(expected), _jsonable(computed), "pass" if ok else "fail")
    raise KeyError(check_id)


def run_checks(grid_size: int = 2, only: list[str] | None = None) -> VerificationReport:
    ctx = _Context(grid_size)
    records = [run_check(cid, grid_size, ctx) for cid, _, _ in CHECKS if only is None or cid in only]
    return VerificationReport(tuple(records), __version__, grid_size)
