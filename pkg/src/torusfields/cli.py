"""Command-line front end.

Subcommands: check, bracket, extactic, meridians, parallels, classify,
singular, first-integral, integrate, report.  Exit codes: 0 on success,
1 on parse or usage errors, 2 when a command that needs an on-torus field
is given one that leaves the torus.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .curves import extactic_xy, invariant_meridians, invariant_parallels
from .dynamics import singular_points
from .families import Family, recognize
from .integrate import export, integrate
from .parsing import ParseError, parse, serialize
from .report import build_report, report_json
from .vfield import (RationalFn, TorusSurface, VectorField,
                     check_first_integral, cofactor_on_torus)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_ON_TORUS = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _field_args(sub: argparse.ArgumentParser, suffix: str = "") -> None:
    sub.add_argument(f"--px{suffix}", required=True,
                     help=f"x-component expression{' of the second field' if suffix else ''}")
    sub.add_argument(f"--qy{suffix}", required=True, help="y-component expression")
    sub.add_argument(f"--rz{suffix}", required=True, help="z-component expression")


def _common_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--m", default="4", help="rational a^2 > 1 (default 4)")
    sub.add_argument("--json", action="store_true", help="emit JSON")
    sub.add_argument("--out", default=None, help="write output to this path")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed echoed into reports (scan phases are deterministic)")


def _parse_m(text: str) -> Fraction:
    m = Fraction(text)
    if m <= 1:
        raise ValueError(f"--m must exceed 1 (the torus needs a > 1), got {m}")
    return m


def _load_field(args, m: Fraction, suffix: str = "") -> VectorField:
    return VectorField(parse(getattr(args, f"px{suffix}"), m),
                       parse(getattr(args, f"qy{suffix}"), m),
                       parse(getattr(args, f"rz{suffix}"), m))


def _emit(args, text: str) -> None:
    data = text if text.endswith("\n") else text + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data)


def _emit_bytes(args, blob: bytes) -> None:
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(blob)
    else:
        sys.stdout.buffer.write(blob)


def _cmd_check(args) -> int:
    m = _parse_m(args.m)
    field = _load_field(args, m)
    cof = cofactor_on_torus(field, TorusSurface(m))
    if args.json:
        payload = {"on_torus": cof.on_torus,
                   "cofactor": serialize(cof.K) if cof.on_torus else None}
        _emit(args, json.dumps(payload, sort_keys=True))
    elif cof.on_torus:
        _emit(args, f"on torus, cofactor K = {serialize(cof.K)}")
    else:
        _emit(args, "NOT on torus")
    return EXIT_OK if cof.on_torus else EXIT_NOT_ON_TORUS


def _cmd_bracket(args) -> int:
    from .vfield import lie_bracket

    m = _parse_m(args.m)
    first = _load_field(args, m)
    second = _load_field(args, m, suffix="2")
    bracket = lie_bracket(first, second)
    if args.json:
        payload = {"P": serialize(bracket.P), "Q": serialize(bracket.Q),
                   "R": serialize(bracket.R)}
        _emit(args, json.dumps(payload, sort_keys=True))
    else:
        _emit(args, "[X,Y] = (\n  {},\n  {},\n  {}\n)".format(
            serialize(bracket.P), serialize(bracket.Q), serialize(bracket.R)))
    return EXIT_OK


def _cmd_extactic(args) -> int:
    m = _parse_m(args.m)
    field = _load_field(args, m)
    ext = extactic_xy(field)
    if args.json:
        _emit(args, json.dumps({"extactic_xy": serialize(ext)}, sort_keys=True))
    else:
        _emit(args, serialize(ext))
    return EXIT_OK


def _require_on_torus(field: VectorField, m: Fraction, args) -> bool:
    if cofactor_on_torus(field, TorusSurface(m)).on_torus:
        return True
    sys.stderr.write("field is NOT on the torus; nothing to analyze\n")
    return False


def _cmd_meridians(args) -> int:
    m = _parse_m(args.m)
    field = _load_field(args, m)
    if not _require_on_torus(field, m, args):
        return EXIT_NOT_ON_TORUS
    mset = invariant_meridians(field)
    if args.json:
        payload = {
            "infinite": mset.infinite,
            "count_with_multiplicity": ("infinite" if mset.infinite
                                        else 2 * mset.plane_multiplicity_total()),
            "planes": [{"a": pl.a, "b": pl.b, "exact": pl.exact,
                        "multiplicity": mult}
                       for pl, mult in mset.planes],
        }
        _emit(args, json.dumps(payload, sort_keys=True))
    elif mset.infinite:
        _emit(args, "infinitely many invariant meridians")
    else:
        lines = [f"{2 * mset.plane_multiplicity_total()} invariant meridian(s) "
                 f"from {len(mset.planes)} plane(s):"]
        for pl, mult in mset.planes:
            ppoly = pl.polynomial()
            desc = serialize(ppoly) if ppoly is not None else f"{pl.a:.12g}*x + {pl.b:.12g}*y"
            lines.append(f"  {desc} = 0   multiplicity {mult}"
                         f"{'' if pl.exact else '   (float)'}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _cmd_parallels(args) -> int:
    m = _parse_m(args.m)
    field = _load_field(args, m)
    if not _require_on_torus(field, m, args):
        return EXIT_NOT_ON_TORUS
    pset = invariant_parallels(field)
    if args.json:
        payload = {
            "infinite": pset.infinite,
            "planes": [{"k": pl.k, "exact": pl.exact, "multiplicity": mult}
                       for pl, mult in pset.planes],
        }
        _emit(args, json.dumps(payload, sort_keys=True))
    elif pset.infinite:
        _emit(args, "infinitely many invariant parallels")
    else:
        lines = [f"{len(pset.planes)} invariant parallel plane(s):"]
        for pl, mult in pset.planes:
            lines.append(f"  z = {pl.k:.12g}   multiplicity {mult}"
                         f"{'' if pl.exact else '   (float)'}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _cmd_classify(args) -> int:
    m = _parse_m(args.m)
    field = _load_field(args, m)
    tag = recognize(field, m)
    if tag.family == Family.NOT_ON_TORUS:
        sys.stderr.write("field is NOT on the torus\n")
        return EXIT_NOT_ON_TORUS
    from .report import _params_dict

    if args.json:
        payload = {"family": tag.family.value,
                   "params": _params_dict(tag.params),
                   "also_matches": [f.value for f in tag.matches
                                    if f != tag.family]}
        _emit(args, json.dumps(payload, sort_keys=True))
    else:
        extra = ", ".join(f.value for f in tag.matches if f != tag.family)
        text = f"family: {tag.family.value}"
        if extra:
            text += f"   (also matches: {extra})"
        _emit(args, text)
    return EXIT_OK


def _cmd_singular(args) -> int:
    m = _parse_m(args.m)
    field = _load_field(args, m)
    tag = recognize(field, m)
    if tag.family == Family.NOT_ON_TORUS:
        sys.stderr.write("field is NOT on the torus\n")
        return EXIT_NOT_ON_TORUS
    sing = singular_points(field, tag, m, grid=args.grid)
    from .report import _singular_dict

    if args.json:
        _emit(args, json.dumps(_singular_dict(sing), sort_keys=True))
    else:
        lines = [f"singular set: {sing.kind.value}"]
        if sing.description:
            lines.append(f"  {sing.description}")
        for pt, cls in sing.points:
            cls_text = cls.value if cls is not None else "unclassified"
            lines.append(f"  ({pt[0]:.12g}, {pt[1]:.12g}, {pt[2]:.12g})  {cls_text}")
        _emit(args, "\n".join(lines))
    return EXIT_OK


def _cmd_first_integral(args) -> int:
    m = _parse_m(args.m)
    field = _load_field(args, m)
    h = RationalFn(parse(args.num, m), parse(args.den, m))
    ok = check_first_integral(field, h)
    if args.json:
        _emit(args, json.dumps({"first_integral": ok}, sort_keys=True))
    else:
        _emit(args, "first integral: " + ("verified" if ok else "NOT a first integral"))
    return EXIT_OK


def _cmd_integrate(args) -> int:
    m = _parse_m(args.m)
    field = _load_field(args, m)
    try:
        start = tuple(float(v) for v in args.start.split(","))
    except ValueError:
        raise ValueError(f"--start must be x,y,z floats, got {args.start!r}")
    if len(start) != 3:
        raise ValueError("--start must have exactly three components")
    traj = integrate(field, start, args.t_end, args.dt, m, project=args.project)
    _emit_bytes(args, export(traj, args.format))
    return EXIT_OK


def _cmd_report(args) -> int:
    m = _parse_m(args.m)
    report = build_report(args.px, args.qy, args.rz, m, seed=args.seed,
                          grid=args.grid)
    _emit_bytes(args, report_json(report))
    return EXIT_OK if report["on_torus"] else EXIT_NOT_ON_TORUS


def make_parser() -> _Parser:
    parser = _Parser(prog="torusfields",
                     description="Polynomial vector fields on the torus "
                                 "(x^2+y^2-a^2)^2 + z^2 = 1: exact cofactors, "
                                 "family recognition, invariant curves, dynamics.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    def add(name: str, fn, help_text: str, second_field: bool = False,
            grid: bool = False):
        sub = subs.add_parser(name, help=help_text)
        _field_args(sub)
        if second_field:
            _field_args(sub, suffix="2")
        _common_args(sub)
        if grid:
            sub.add_argument("--grid", type=int, default=512,
                             help="singular-scan grid resolution per axis")
        sub.set_defaults(fn=fn)
        return sub

    add("check", _cmd_check, "torus membership and cofactor")
    add("bracket", _cmd_bracket, "Lie bracket of two fields", second_field=True)
    add("extactic", _cmd_extactic, "extactic polynomial for span(x, y)")
    add("meridians", _cmd_meridians, "invariant meridian planes")
    add("parallels", _cmd_parallels, "invariant parallel planes")
    add("classify", _cmd_classify, "family recognition with parameters")
    add("singular", _cmd_singular, "singular set on the torus", grid=True)

    sub = add("first-integral", _cmd_first_integral,
              "verify a rational first integral")
    sub.add_argument("--num", required=True, help="numerator expression")
    sub.add_argument("--den", default="1", help="denominator expression")

    sub = add("integrate", _cmd_integrate, "RK4 trajectory export")
    sub.add_argument("--start", required=True, help="start point as x,y,z")
    sub.add_argument("--t-end", type=float, default=10.0, dest="t_end")
    sub.add_argument("--dt", type=float, default=1e-3)
    sub.add_argument("--project", action="store_true",
                     help="re-project onto the torus after each step")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")

    add("report", _cmd_report, "full analysis report (JSON)", grid=True)
    return parser


_VALUE_FLAGS = {"--px", "--qy", "--rz", "--px2", "--qy2", "--rz2",
                "--num", "--den", "--start", "--m"}


def _join_value_flags(argv: list[str]) -> list[str]:
    """Fuse '--px -x*y' into '--px=-x*y' so leading minus signs survive."""
    out = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{token}={argv[i + 1]}")
            skip = True
        else:
            out.append(token)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _join_value_flags(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except ParseError as exc:
        sys.stderr.write(f"expression error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, OverflowError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
