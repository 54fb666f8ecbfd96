"""Text and JSON formats: algebra-definition files and solved curvature spaces.

An algebra file looks like::

    name: my-algebra
    params: alpha=1/2 beta=0
    # one matrix per block of 8 rows, rationals written n/d or n
    0 -1 0 0 0 0 0 0
    ...

Blank lines and ``#`` comments are ignored; every 8 numeric rows form one
basis matrix.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable

import numpy as np

from .algebra import Subalgebra
from .curvature import CurvatureSpace, berger_check
from .realification import DIM, fmat

__all__ = [
    "AlgebraFileError", "render_rational", "parse_rational", "parse_algebra",
    "read_algebra", "format_algebra", "space_to_dict", "dumps",
]


class AlgebraFileError(ValueError):
    pass


def render_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise AlgebraFileError(f"not a rational number: {token!r}") from exc


def parse_algebra(text: str, default_name: str = "user") -> Subalgebra:
    """Parse an algebra definition; the result is checked for closure like any catalog entry."""
    name = default_name
    params: dict[str, Fraction] = {}
    rows: list[list[Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if sep and key.strip() in ("name", "params"):
            if key.strip() == "name":
                name = value.strip() or default_name
            else:
                for item in value.split():
                    k, eq, v = item.partition("=")
                    if not eq:
                        raise AlgebraFileError(f"line {lineno}: expected key=value, got {item!r}")
                    params[k] = parse_rational(v)
            continue
        row = [parse_rational(t) for t in line.split()]
        if len(row) != DIM:
            raise AlgebraFileError(f"line {lineno}: expected {DIM} entries, got {len(row)}")
        rows.append(row)
    if not rows:
        raise AlgebraFileError("no basis matrices found")
    if len(rows) % DIM:
        raise AlgebraFileError(f"{len(rows)} matrix rows is not a multiple of {DIM}")
    basis = [fmat(rows[n:n + DIM]) for n in range(0, len(rows), DIM)]
    return Subalgebra(name, tuple(basis), params, "user-supplied file", "user")


def read_algebra(path: str | Path) -> Subalgebra:
    path = Path(path)
    return parse_algebra(path.read_text(), path.stem)


def format_algebra(g: Subalgebra) -> str:
    lines = [f"name: {g.name}"]
    params = {k: v for k, v in g.params.items() if not k.startswith("_")}
    if params:
        lines.append("params: " + " ".join(f"{k}={render_rational(v)}" for k, v in params.items()))
    for n, M in enumerate(g.basis):
        lines.append(f"# basis element {n}")
        for row in M:
            lines.append(" ".join(render_rational(x) for x in row))
    return "\n".join(lines) + "\n"


def space_to_dict(space: CurvatureSpace, checks: dict[str, bool] | None = None) -> dict:
    """``{algebra, dim, basis, checks}``; each basis element is 28 lists of 64 rational strings."""
    if checks is None:
        checks = {
            "bianchi": all(T.satisfies_bianchi() for T in space.basis),
            "eq_star": all(T.satisfies_pair_symmetry() for T in space.basis),
            "berger": berger_check(space.algebra, space).is_berger if space.algebra is not None else False,
        }
    return {
        "algebra": space.algebra.name if space.algebra is not None else space.label,
        "dim": space.dim,
        "basis": [[[render_rational(x) for x in M.reshape(-1)] for M in T.images] for T in space.basis],
        "checks": dict(checks),
    }


def dumps(obj) -> str:
    """Deterministic JSON (fixed key order given by construction, no trailing spaces)."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
