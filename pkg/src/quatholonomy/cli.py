"""Command-line entry point: catalog, curvature spaces, Berger test, prolongations,
the lambda classifier and the full reproduction report."""
from __future__ import annotations

import argparse
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import algebra
from .algebra import ClosureError, Subalgebra
from .curvature import CLOSED_FORMS, berger_check, bianchi_nullspace, section6_conditions
from .io import AlgebraFileError, dumps, read_algebra, render_rational, space_to_dict
from .prolongation import first_prolongation
from .realification import PAIRS, BASIS_LABELS, MembershipError, unrealify
from .symmetric import (
    ClassificationError, PhiMap, canonical_lambda, family_tensor, phi_from_tensor,
    two_dim_tensor,
)
from .verification import run_checks

log = logging.getLogger("quatholonomy")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _family_params(args) -> dict:
    return {k: getattr(args, k) for k in ("alpha", "beta", "gamma") if getattr(args, k, None) is not None}


def _resolve(target: str, args) -> Subalgebra:
    path = Path(target)
    if path.suffix == ".alg" or path.is_file():
        return read_algebra(path)
    return algebra.get(target, **_family_params(args))


def _describe_image(M) -> str:
    try:
        A = unrealify(M)
    except MembershipError:
        return "[" + "; ".join(" ".join(render_rational(x) for x in row) for row in M) + "]"
    return f"Op(({A[0, 0]}, {A[0, 1]}), ({A[1, 0]}, {A[1, 1]}))"


# --- subcommands ---------------------------------------------------------------

def cmd_catalog(args) -> int:
    if args.family:
        entries = [algebra.get(args.family, **_family_params(args))]
    else:
        entries = algebra.catalog()
    if args.json:
        rows = [{"name": g.name, "dim": g.dim, "source": g.source, "presentation": g.presentation,
                 "params": {k: render_rational(v) for k, v in g.params.items() if not k.startswith("_")}}
                for g in entries]
        sys.stdout.write(dumps(rows))
        return 0
    for g in entries:
        params = ", ".join(f"{k}={v}" for k, v in g.params.items() if not k.startswith("_"))
        extra = f" [{params}]" if params else ""
        print(f"{g.name:<10} dim {g.dim:<3} {g.source}{extra}")
    return 0


def cmd_rspace(args) -> int:
    g = _resolve(args.algebra, args)
    space = bianchi_nullspace(g)
    if args.json:
        sys.stdout.write(dumps(space_to_dict(space)))
    else:
        print(f"R({g.name}): dim {space.dim}")
        for n, T in enumerate(space.basis):
            print(f"basis element {n}:")
            for k, (a, b) in enumerate(PAIRS):
                M = T.images[k]
                if any(M.flat):
                    print(f"  R({BASIS_LABELS[a]} ^ {BASIS_LABELS[b]}) = {_describe_image(M)}")
    if args.check_prop1:
        if g.name not in CLOSED_FORMS:
            print(f"no closed form recorded for {g.name}", file=sys.stderr)
            return 1
        check = section6_conditions(g.name, space, strict=False)
        word = "matches" if check.match else "DOES NOT match"
        print(f"{word} closed-form conditions: {check.description}", file=sys.stderr if args.json else sys.stdout)
        return 0 if check.match else 1
    return 0


def cmd_berger(args) -> int:
    g = _resolve(args.algebra, args)
    verdict = berger_check(g)
    if args.json:
        sys.stdout.write(dumps({"algebra": g.name, "dim": g.dim, "dim_R": verdict.dim_R,
                                "dim_L": verdict.dim_L, "berger": verdict.is_berger}))
    else:
        print(verdict)
    return 0


PROLONGATION_INPUTS = {
    "sp4R": algebra.sp4r_block,
    "sl2C": algebra.sl2c_block,
    "zero": lambda: [],
}


def cmd_prolongation(args) -> int:
    h = PROLONGATION_INPUTS[args.algebra]()
    P = first_prolongation(h)
    if args.json:
        sys.stdout.write(dumps({"algebra": args.algebra, "dim_h": len(h), "dim_prolongation": P.dim}))
    else:
        print(f"{args.algebra}: dim h = {len(h)}, dim h^(1) = {P.dim}")
    return 0


def cmd_classify(args) -> int:
    if args.two_dim:
        R, tensor_id, name = two_dim_tensor(), "two-dim", "g6"
    elif args.lam is not None:
        R, tensor_id, name = family_tensor(args.lam), f"family({render_rational(args.lam)})", "g4"
    else:
        R = None
        tensor_id, name = "d=" + ",".join(render_rational(x) for x in args.d), "g4"
    phi = PhiMap.from_d(args.d) if R is None else phi_from_tensor(R)
    row = {"algebra": name, "tensor_id": tensor_id, "matphi": [render_rational(x) for x in phi.flat()]}
    if args.two_dim:
        row["lambda"] = None
        row["sign_flip_used"] = False
    else:
        inv = canonical_lambda(phi, allow_sign_flip=args.allow_sign_flip)
        row["lambda"] = inv.render()
        row["sign_flip_used"] = inv.sign_flip_used
    if args.json:
        sys.stdout.write(dumps(row))
    else:
        print(f"{row['algebra']} {row['tensor_id']}: Mat phi = {' '.join(row['matphi'])}")
        if row["lambda"] is not None:
            print(f"canonical lambda = {row['lambda']} (sign flip used: {row['sign_flip_used']})")
    return 0


def cmd_verify_paper(args) -> int:
    report = run_checks(grid_size=args.grid_size)
    text = dumps(report.to_dict())
    if args.out:
        Path(args.out).write_text(text)
    if args.json:
        sys.stdout.write(text)
    else:
        for c in report.checks:
            print(f"{c.status.upper():<4}  {c.check_id}  {c.claim}")
        print("overall:", "PASS" if report.passed else "FAIL")
    return 0 if report.passed else 1


# --- parser --------------------------------------------------------------------

def _add_family_flags(p):
    p.add_argument("--alpha", type=_rational)
    p.add_argument("--beta", type=_rational)
    p.add_argument("--gamma", type=_rational)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quatholonomy", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list the catalog algebras")
    p.add_argument("--json", action="store_true")
    p.add_argument("--family", choices=sorted(algebra.FAMILIES))
    _add_family_flags(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("rspace", help="solve the space of curvature tensors R(g)")
    p.add_argument("algebra", help="catalog name or path to an algebra file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--check-prop1", action="store_true", help="compare with the closed-form parametrization")
    _add_family_flags(p)
    p.set_defaults(func=cmd_rspace)

    p = sub.add_parser("berger", help="decide whether L(R(g)) = g")
    p.add_argument("algebra")
    p.add_argument("--json", action="store_true")
    _add_family_flags(p)
    p.set_defaults(func=cmd_berger)

    p = sub.add_parser("prolongation", help="first prolongation of a 4-dimensional linear algebra")
    p.add_argument("algebra", choices=sorted(PROLONGATION_INPUTS))
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_prolongation)

    p = sub.add_parser("classify", help="canonical lambda of a tensor of type g4")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--d", type=_rational, nargs=5, metavar="D", help="the five parameters d1..d5")
    group.add_argument("--lambda", dest="lam", type=_rational, help="the explicit family tensor")
    group.add_argument("--two-dim", action="store_true", help="the tensor of type g6")
    p.add_argument("--allow-sign-flip", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-paper", help="run every reproduction check")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--grid-size", type=int, default=2, help="numerator/denominator bound for family sweeps")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_paper)
    return ap


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("QUATHOLONOMY_LOG", "WARNING").upper(),
                        format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (KeyError, ClosureError, AlgebraFileError, ClassificationError, MembershipError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
