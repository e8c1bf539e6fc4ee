"""Command line interface.

Every subcommand prints one record per line as space-separated key=value
pairs (or a JSON object with --json); rationals are always reduced and
rendered as "p/q", or "p" when the denominator is 1. Output is deterministic
and byte-stable for fixed inputs.

Exit codes: 0 success, 2 input error, 3 contract violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import localsig, meyer, varieties
from .errors import ContractViolation, InvalidInput
from .exactnum import parse_matrix
from .symplectic import SymplecticElement

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONTRACT = 3


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    return value


def _emit(pairs: list[tuple[str, object]], as_json: bool, prefix: str = "") -> None:
    if as_json:
        print(json.dumps({k: _jsonable(v) for k, v in pairs}))
    else:
        body = " ".join(f"{k}={_fmt(v)}" for k, v in pairs)
        print(prefix + body if prefix else body)


def _load_symplectic(path: str) -> SymplecticElement:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInput(f"cannot read {path!r}: {exc}") from exc
    mat = parse_matrix(text)
    if mat.rows != mat.cols or mat.rows % 2 != 0 or mat.rows < 2:
        raise InvalidInput(
            f"{path!r}: need an even square matrix of size >= 2, got {mat.shape}"
        )
    return SymplecticElement(mat)


def _parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"bad rational {token!r}") from exc


def _parse_degrees(token: str) -> tuple[int, ...]:
    if token.strip() == "":
        return ()
    try:
        return tuple(int(t) for t in token.split(","))
    except ValueError as exc:
        raise InvalidInput(f"bad degree list {token!r}") from exc


def cmd_tau(args) -> int:
    a1 = _load_symplectic(args.a1)
    a2 = _load_symplectic(args.a2)
    value = meyer.tau(a1, a2)
    if args.json:
        print(json.dumps({"tau": value}))
    else:
        print(value)
    return EXIT_OK


def cmd_phi1(args) -> int:
    el = _load_symplectic(args.matrix)
    if el.g != 1:
        raise InvalidInput(f"phi1 needs a 2x2 matrix, got genus {el.g}")
    value = meyer.phi1(el)
    if args.json:
        print(json.dumps({"phi1": str(value)}))
    else:
        print(value)
    return EXIT_OK


def _ci_pairs(inv: varieties.SurfaceInvariants, rep: varieties.LassoReport):
    pairs: list[tuple[str, object]] = [
        ("sign", inv.sign),
        ("chi", inv.chi),
        ("deg", inv.deg),
        ("genus", inv.genus),
        ("deg_DX", rep.deg_DX),
        ("phi", rep.phi),
        ("alpha", rep.alpha),
        ("beta", rep.beta),
    ]
    if inv.genus == 1:
        pairs.append(("genus_boundary", True))
    return pairs


def cmd_ci(args) -> int:
    degrees = _parse_degrees(args.degrees)
    inv, rep = varieties.ci_surface_invariants(args.m, degrees)
    _emit(_ci_pairs(inv, rep), args.json)
    return EXIT_OK


def cmd_veronese(args) -> int:
    spec = varieties.CISpec(args.m, _parse_degrees(args.degrees), args.n, args.d)
    rep = varieties.veronese_ci_lasso(spec)
    _emit(
        [
            ("alpha", rep.alpha),
            ("beta", rep.beta),
            ("deg_DX", rep.deg_DX),
            ("phi", rep.phi),
        ],
        args.json,
    )
    return EXIT_OK


def cmd_lasso_power(args) -> int:
    value = meyer.lasso_power(_parse_rational(args.phi), args.n)
    if args.json:
        print(json.dumps({"phi": str(value)}))
    else:
        print(value)
    return EXIT_OK


def cmd_germ(args) -> int:
    entry = localsig.germ(args.name)
    _emit(
        [
            ("phi", entry.phi_value),
            ("nbhd_sign", entry.nbhd_sign),
            ("sigma", entry.sigma),
        ],
        args.json,
    )
    return EXIT_OK


def cmd_fibration(args) -> int:
    try:
        with open(args.ledger, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidInput(f"cannot read {args.ledger!r}: {exc}") from exc
    led = localsig.ledger_from_json(text)
    if args.solve:
        solved = localsig.solve_unknown_germ(led)
        _emit(
            [
                ("name", solved.name),
                ("phi", solved.phi),
                ("nbhd_sign", solved.nbhd_sign),
                ("sigma", solved.sigma),
            ],
            args.json,
        )
    else:
        report = localsig.check_fibration(led)
        _emit(
            [
                ("total_sign", report.total_sign),
                ("germ_sum", report.germ_sum),
                ("residual", report.residual),
                ("ok", report.ok),
            ],
            args.json,
        )
    return EXIT_OK


def cmd_presets(args) -> int:
    if args.json:
        out = []
        for name in varieties.named_presets():
            preset = varieties.resolve_preset(name)
            item: dict = {"name": name}
            if preset.invariants is not None:
                inv = preset.invariants
                item.update(sign=inv.sign, chi=inv.chi, deg=inv.deg, genus=inv.genus)
            rep = preset.report
            item.update(
                deg_DX=rep.deg_DX,
                phi=str(rep.phi),
                alpha=None if rep.alpha is None else str(rep.alpha),
                beta=rep.beta,
            )
            out.append(item)
        print(json.dumps(out))
        return EXIT_OK
    for name in varieties.named_presets():
        preset = varieties.resolve_preset(name)
        pairs: list[tuple[str, object]] = []
        if preset.invariants is not None:
            inv = preset.invariants
            pairs += [
                ("sign", inv.sign),
                ("chi", inv.chi),
                ("deg", inv.deg),
                ("genus", inv.genus),
            ]
        rep = preset.report
        if rep.alpha is not None:
            pairs += [("alpha", rep.alpha), ("beta", rep.beta)]
        pairs += [("deg_DX", rep.deg_DX), ("phi", rep.phi)]
        _emit(pairs, as_json=False, prefix=f"{name} ")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meyersig",
        description=(
            "Exact computation of the signature cocycle on the symplectic "
            "group, the Meyer function on SL(2,Z), lasso values for embedded "
            "projective varieties, and local signatures of fiber germs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of key=value text")

    p = sub.add_parser("tau", parents=[common], help="signature cocycle of two symplectic matrices")
    p.add_argument("--a1", required=True, help="matrix file (format: 'rows cols' then entries)")
    p.add_argument("--a2", required=True, help="matrix file")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("phi1", parents=[common], help="Meyer function on an SL(2,Z) matrix")
    p.add_argument("--matrix", required=True, help="2x2 matrix file")
    p.set_defaults(func=cmd_phi1)

    p = sub.add_parser("ci", parents=[common], help="complete intersection surface invariants and lasso value")
    p.add_argument("--m", type=int, required=True, help="number of defining degrees")
    p.add_argument("--degrees", required=True, help="comma-separated degrees, e.g. 2,3")
    p.set_defaults(func=cmd_ci)

    p = sub.add_parser("veronese", parents=[common], help="lasso value for a Veronese-embedded complete intersection")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--degrees", required=True, help="comma-separated degrees; '' for m=0")
    p.add_argument("--n", type=int, required=True, help="dimension of the variety")
    p.add_argument("--d", type=int, required=True, help="Veronese degree")
    p.set_defaults(func=cmd_veronese)

    p = sub.add_parser("lasso-power", parents=[common], help="Meyer value on the n-th power of a lasso")
    p.add_argument("--phi", required=True, help="value on the lasso, as p/q")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_lasso_power)

    p = sub.add_parser("germ", parents=[common], help="look up a built-in fiber germ")
    p.add_argument("--name", required=True, help="e.g. R4/F_31 or NT5/F_I")
    p.set_defaults(func=cmd_germ)

    p = sub.add_parser("fibration", parents=[common], help="check or solve a fibration ledger (JSON file)")
    p.add_argument("--ledger", required=True, help="ledger JSON file")
    p.add_argument("--solve", action="store_true", help="solve for the single germ with phi null")
    p.set_defaults(func=cmd_fibration)

    p = sub.add_parser("presets", parents=[common], help="list the named variety presets")
    p.set_defaults(func=cmd_presets)

    return parser


_RATIONAL_OPTIONS = ("--phi",)


def _merge_rational_values(argv: list[str]) -> list[str]:
    # "--phi -9/17" would be read as two options; fold it into "--phi=-9/17"
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RATIONAL_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_rational_values(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already wrote the usage message
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ContractViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
