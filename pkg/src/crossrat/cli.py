"""Command-line front end.

Exit status: 0 on success, 1 when a property sweep reports failures,
2 on unparsable input, 3 when an operation's precondition is violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classify as cls
from .crossratio import crossratio_sweep
from .errors import CycleParseError, PreconditionError
from .group import PermGroup
from .perm import format_cycles
from .rationality import VerdictKind, decide, witness_nonrational
from .twogroup import sylow_2

DEFAULT_SEED = 20161004

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3


class InputError(Exception):
    pass


def _gens_str(gens) -> str:
    return ", ".join(format_cycles(g) for g in gens) or "()"


def load_group(args) -> PermGroup:
    if args.group:
        try:
            text = sys.stdin.read() if args.group == "-" else Path(args.group).read_text()
            data = json.loads(text)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read group JSON {args.group!r}: {exc}") from None
        if isinstance(data, dict) and "group" in data:
            data = data["group"]
        if not isinstance(data, dict) or "degree" not in data or "generators" not in data:
            raise InputError("group JSON needs 'degree' and 'generators'")
        return PermGroup.from_json(data)
    if args.degree is None:
        raise InputError("give --degree with --gens, or --group FILE")
    return PermGroup.from_cycles(args.degree, args.gens or [])


def _emit(args, payload: dict, plain_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(plain_lines))


# -- verbs --------------------------------------------------------------------


def cmd_decide(args) -> int:
    g = load_group(args)
    verdict = decide(g)
    assert verdict.validate()
    payload = {"group": g.to_json(), **verdict.to_json()}
    lines = [f"verdict: {verdict.kind.value}"]
    cert = verdict.certificate
    if verdict.kind is VerdictKind.RATIONAL:
        members = ", ".join(map(str, cert.members))
        lines.append(f"odd orbit: {{{members}}} (size {cert.size})")
    else:
        p = cert.sylow.sylow
        lines.append(f"2-Sylow P: order {p.order()}, index {cert.sylow.index}, generators {_gens_str(p.generators)}")
        lines.append("fixed points of P: none")
        for w in cert.witnesses:
            lines.append(
                f"orbit of {w.point}: stabilizer <{_gens_str(w.stabilizer_gens)}> "
                f"<= H = <{_gens_str(w.subgroup_gens)}>, [P:H] = 2, H normal"
            )
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_orbits(args) -> int:
    g = load_group(args)
    dec = g.orbits()
    records = [
        {
            "representative": o.representative,
            "members": list(o.members),
            "size": o.size,
            "stabilizer": [format_cycles(s) for s in o.stabilizer_generators],
        }
        for o in dec.orbits
    ]
    if args.format == "csv":
        print("representative,members,size,stabilizer")
        for r in records:
            print(f"{r['representative']},{' '.join(map(str, r['members']))},{r['size']},{'; '.join(r['stabilizer'])}")
        return EXIT_OK
    lines = [f"order: {g.order()}"]
    for r in records:
        members = ", ".join(map(str, r["members"]))
        lines.append(f"{{{members}}} size {r['size']}, stabilizer of {r['representative']}: <{', '.join(r['stabilizer'])}>")
    _emit(args, {"group": g.to_json(), "order": g.order(), "orbits": records}, lines)
    return EXIT_OK


def cmd_sylow(args) -> int:
    g = load_group(args)
    w = sylow_2(g)
    fixed = w.sylow.fixed_points()
    payload = {**w.to_json(), "parent_order": w.parent_order, "fixed_points": fixed}
    lines = [
        f"|S| = {w.parent_order}, |P| = {w.sylow.order()}, index {w.index}",
        f"P = <{_gens_str(w.sylow.generators)}>",
        f"fixed points of P: {', '.join(map(str, fixed)) or 'none'}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_witness(args) -> int:
    g = load_group(args)
    p = sylow_2(g).sylow if args.sylow else g
    witnesses = witness_nonrational(p)
    assert all(w.validate(p) for w in witnesses)
    payload = {"group": p.to_json(), "order": p.order(), "witnesses": [w.to_json() for w in witnesses]}
    lines = [f"P = <{_gens_str(p.generators)}>, order {p.order()}"]
    for w in witnesses:
        lines.append(
            f"orbit of {w.point}: stabilizer <{_gens_str(w.stabilizer_gens)}> "
            f"<= H = <{_gens_str(w.subgroup_gens)}>, [P:H] = 2, H normal"
        )
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_classify(args) -> int:
    rows = cls.tabulate(args.degree, max_degree=args.max_degree)
    if args.format == "json":
        text = cls.rows_to_json(rows)
    elif args.format == "csv":
        text = cls.rows_to_csv(rows)
    else:
        lines = [f"{len(rows)} conjugacy classes of subgroups of Sym({args.degree})"]
        for r in rows:
            lines.append(
                f"{r.class_id:3d}  order {r.group_order:4d}  orbits {'+'.join(map(str, r.orbit_sizes)):14s}"
                f"  |P| {r.sylow_order:3d}  fixed {r.sylow_fixed_points}  {r.verdict}"
                f"  <{', '.join(r.representative_generators)}>"
            )
        text = "\n".join(lines) + "\n"
    sys.stdout.write(text)

    figure = args.figure
    if args.report_dir:
        out = Path(args.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        stem = f"classify_n{args.degree}"
        (out / f"{stem}.csv").write_text(cls.rows_to_csv(rows))
        (out / f"{stem}.json").write_text(cls.rows_to_json(rows))
        figure = figure or out / f"{stem}.png"
    if figure:
        from .plotting import plot_classification

        plot_classification(rows, figure, title=f"Subgroup classes of Sym({args.degree})")
    return EXIT_OK


def cmd_crossratio_check(args) -> int:
    report = crossratio_sweep(args.seed, trials=args.trials, n=args.points)
    payload = report.to_json()
    lines = [
        f"seed {report.seed}, {report.trials} trials, {report.points} points",
        f"PGL2 invariance: {report.invariance_passed} passed, {report.trials - report.invariance_passed} failed",
        f"descended action: {report.descended_passed} passed, {report.trials - report.descended_passed} failed",
        "PASS" if report.ok else "FAIL",
    ]
    _emit(args, payload, lines)
    return EXIT_OK if report.ok else EXIT_FAILED


# -- parser -------------------------------------------------------------------


def _add_group_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--degree", "-n", type=int, help="degree n of the symmetric group")
    p.add_argument("--gens", nargs="*", metavar="CYCLES", help='generators in cycle notation, e.g. "(1 2)(3 4)"')
    p.add_argument("--group", metavar="FILE", help='group JSON {"degree": n, "generators": [...]}, "-" for stdin')
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossrat",
        description="Orbit-parity rationality verdicts for subgroups of Sym(n), with certificates.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("decide", help="rational / not unirational verdict with certificate")
    _add_group_args(p)
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("orbits", help="orbit decomposition with stabilizer generators")
    _add_group_args(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("sylow", help="2-Sylow subgroup and its fixed points")
    _add_group_args(p)
    p.set_defaults(func=cmd_sylow)

    p = sub.add_parser("witness", help="index-2 witnesses for a fixed-point-free 2-group")
    _add_group_args(p)
    p.add_argument("--sylow", action="store_true", help="replace the group by its 2-Sylow subgroup first")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("classify", help="verdict table over subgroup classes of Sym(n)")
    p.add_argument("--degree", "-n", type=int, required=True)
    p.add_argument("--format", choices=["plain", "json", "csv"], default="csv")
    p.add_argument("--max-degree", type=int, default=cls.DEFAULT_MAX_DEGREE)
    p.add_argument("--report-dir", metavar="DIR", help="write CSV, JSON and a PNG figure here")
    p.add_argument("--figure", metavar="PATH", help="write the figure to this path")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("crossratio-check", help="seeded exact cross-ratio invariance sweeps")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--points", type=int, default=5)
    p.add_argument("--format", choices=["plain", "json"], default="plain")
    p.set_defaults(func=cmd_crossratio_check)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CycleParseError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
