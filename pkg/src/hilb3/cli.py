"""Command-line interface: ``hilb3 <command> [options]``.

Exit status is 0 on success, 1 when a verification suite finds a failure,
and 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from ._parallel import resolve_threads
from .critical import (hessian_tangent_dim, in_m_cubed, is_invariant, jacobian_generators,
                       nu_isolated, parse_poly, parse_weights)
from .localization import weighted_euler_hilb
from .partitions import format_ideal, iter_ideals, iter_partitions, parse_ideal, partition_count, to_ideal
from .series import dt_series, euler_series, macmahon_series
from .tangent import tangent_report, tangent_reports
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _emit(lines, out):
    for line in lines:
        out.write(line + "\n")


def cmd_partitions(args, out):
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.count_only:
        out.write(f"{partition_count(args.n)}\n")
        return EXIT_OK
    for k, pp in enumerate(iter_partitions(args.n)):
        if args.format == "json":
            out.write(_dump(pp.to_json()) + "\n")
        elif args.format == "csv":
            out.write(f"{args.n},{k},{format_ideal(to_ideal(pp))}\n")
        else:
            rows = " / ".join(" ".join(map(str, r)) for r in pp.heights) or "(empty)"
            out.write(f"{rows}\n")
    return EXIT_OK


def _tangent_text(rep) -> str:
    ws = " ".join(f"({w[0]},{w[1]},{w[2]})x{m}" if m > 1 else f"({w[0]},{w[1]},{w[2]})"
                  for w, m in rep.character.counts)
    return (f"I={format_ideal(rep.ideal, 'monomial')} n={rep.ideal.colength} dim={rep.dim} "
            f"parity_ok={rep.parity_ok} cone_ok={rep.cone_ok} "
            f"diagonal_free={rep.diagonal_free} weights: {ws}")


def cmd_tangent(args, out):
    if (args.ideal is None) == (args.n is None):
        raise UsageError("give exactly one of --ideal or --n")
    if args.ideal is not None:
        ideal = parse_ideal(args.ideal)
        if not ideal.is_finite_colength:
            raise UsageError(f"ideal {args.ideal!r} has infinite colength")
        reports = [tangent_report(ideal)]
    else:
        if args.n < 1:
            raise UsageError("--n must be >= 1")
        reports = tangent_reports(iter_ideals(args.n), args.threads)
    for rep in reports:
        if args.format == "text":
            out.write(_tangent_text(rep) + "\n")
        elif args.format == "csv":
            out.write(f"{rep.ideal.colength},{format_ideal(rep.ideal)},{rep.dim},"
                      f"{int(rep.parity_ok)},{int(rep.cone_ok)},{int(rep.diagonal_free)}\n")
        else:
            out.write(_dump(rep.to_json()) + "\n")
    return EXIT_OK


def cmd_localize(args, out):
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    res = weighted_euler_hilb(args.n, args.threads)
    if args.format == "json":
        out.write(_dump(res.to_json(per_point=args.per_point)) + "\n")
    elif args.format == "csv":
        out.write(f"{res.n},{res.weighted_euler},{res.fixed_point_count}\n")
    else:
        out.write(f"n={res.n} weighted_euler={res.weighted_euler} "
                  f"fixed_point_count={res.fixed_point_count} subgroup={res.subgroup.lam}\n")
    if args.per_point and args.format != "json":
        for ideal, sign in res.per_point:
            out.write(f"{format_ideal(ideal)},{sign:+d}\n")
    return EXIT_OK


_KINDS = {
    "dt": dt_series,
    "euler": euler_series,
    "macmahon": lambda chi, n: macmahon_series(n),
}


def cmd_series(args, out):
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    s = _KINDS[args.kind](args.chi, args.order)
    if args.format == "csv":
        out.write("n,coefficient\n")
        for n, c in enumerate(s):
            out.write(f"{n},{c}\n")
    elif args.format == "text":
        out.write(",".join(map(str, s)) + "\n")
    else:
        chi = None if args.kind == "macmahon" else args.chi
        out.write(_dump({"kind": args.kind, "chi": chi, "order": s.order,
                         "coefficients": list(s)}) + "\n")
    return EXIT_OK


def cmd_critical(args, out):
    if (args.poly is None) == (args.expr is None):
        raise UsageError("give exactly one of --poly FILE or --expr TEXT")
    weights = parse_weights(args.weights)
    if args.poly is not None:
        with open(args.poly, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = args.expr
    f = parse_poly(text, weights)
    record = {
        "poly": str(f),
        "num_vars": f.num_vars,
        "weights": list(f.weights),
        "invariant": is_invariant(f),
        "in_m_cubed": in_m_cubed(f),
        "hessian_tangent_dim": hessian_tangent_dim(f),
        "jacobian": [str(g) for g in jacobian_generators(f)],
    }
    try:
        record["nu"] = nu_isolated(f)
    except ValueError as exc:
        record["nu"] = None
        record["nu_error"] = str(exc)
    if args.format == "json":
        out.write(_dump(record) + "\n")
    else:
        for k, v in record.items():
            out.write(f"{k}: {v}\n")
    return EXIT_OK


def cmd_verify(args, out):
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    outcomes = run_suite(args.suite, args.max_n, args.threads)
    for o in outcomes:
        if args.format == "json":
            out.write(_dump(o.to_json()) + "\n")
        else:
            status = "PASS" if o.ok else "FAIL"
            out.write(f"{status} {o.suite} max_n={o.max_n} cases={o.cases_checked} "
                      f"failures={len(o.failures)}\n")
            for case, exp, act in o.failures:
                out.write(f"  {case}: expected {exp!r}, got {act!r}\n")
    return EXIT_OK if all(o.ok for o in outcomes) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS,
                        help="worker processes (0 = all cores; default $HILB3_THREADS or 1)")

    parser = argparse.ArgumentParser(prog="hilb3", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("json", "csv", "text"), default="json")
    parser.add_argument("--threads", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", parents=[common], help="enumerate plane partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_partitions)

    p = sub.add_parser("tangent", parents=[common], help="tangent space report at monomial ideals")
    p.add_argument("--ideal", help='e.g. "1,0,0;0,1,0;0,0,1" or "x^2;y;z"')
    p.add_argument("--n", type=int, help="report every ideal of colength n")
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("localize", parents=[common], help="weighted Euler characteristic of Hilb^n A^3")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--per-point", action="store_true")
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("series", parents=[common], help="MacMahon, Euler or DT generating series")
    p.add_argument("--chi", type=int, default=1)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--kind", choices=sorted(_KINDS), default="dt")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("critical", parents=[common], help="Behrend function of Z(df) at the origin")
    p.add_argument("--poly", metavar="FILE", help="file holding the polynomial")
    p.add_argument("--expr", metavar="TEXT", help="polynomial given inline")
    p.add_argument("--weights", required=True, help="comma-separated integers, e.g. --weights=1,-2")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)}, all")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        args.threads = resolve_threads(args.threads)
        return args.func(args, out)
    except (UsageError, ValueError, OSError) as exc:
        sys.stderr.write(f"hilb3 {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
