import json

import numpy as np
import pytest

from quatholonomy import algebra
from quatholonomy.algebra import ClosureError
from quatholonomy.curvature import bianchi_nullspace
from quatholonomy.io import (
    AlgebraFileError, dumps, format_algebra, parse_algebra, parse_rational, read_algebra,
    render_rational, space_to_dict,
)


def test_rationals():
    assert render_rational(3) == "3/1"
    assert render_rational(parse_rational("-6/4")) == "-3/2"
    with pytest.raises(AlgebraFileError):
        parse_rational("x")


@pytest.mark.parametrize("name", ["g6", "case-III", "h0"])
def test_roundtrip(name, tmp_path):
    g = algebra.get(name)
    path = tmp_path / f"{name}.alg"
    path.write_text(format_algebra(g))
    back = read_algebra(path)
    assert back.same_span(g)
    assert all(np.array_equal(a, b) for a, b in zip(back.basis, g.basis))


def test_parse_errors():
    with pytest.raises(AlgebraFileError, match="no basis"):
        parse_algebra("name: x\n")
    with pytest.raises(AlgebraFileError, match="expected 8"):
        parse_algebra("1 2 3\n")
    with pytest.raises(AlgebraFileError, match="multiple"):
        parse_algebra("0 0 0 0 0 0 0 0\n" * 3)
    with pytest.raises(AlgebraFileError, match="key=value"):
        parse_algebra("params: alpha\n" + "0 0 0 0 0 0 0 0\n" * 8)


def test_parse_rejects_non_closed_span():
    text = format_algebra(algebra.get("sl1H")).splitlines()
    # drop the last generator: (i,0), (j,0) alone do not close
    keep = [line for line in text if not line.startswith("#")][:-8]
    with pytest.raises(ClosureError):
        parse_algebra("\n".join(keep))


def test_space_json():
    space = bianchi_nullspace(algebra.g6())
    d = json.loads(dumps(space_to_dict(space)))
    assert d["algebra"] == "g6" and d["dim"] == 2
    assert len(d["basis"]) == 2 and len(d["basis"][0]) == 28 and len(d["basis"][0][0]) == 64
    assert d["checks"] == {"bianchi": True, "eq_star": True, "berger": True}
    assert dumps(space_to_dict(space)) == dumps(space_to_dict(bianchi_nullspace(algebra.g6())))
