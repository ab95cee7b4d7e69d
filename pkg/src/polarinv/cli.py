"""Command line interface: ``polarinv <subcommand> ...``."""
from __future__ import annotations

import argparse
import logging
import sys

from . import harness
from .fields import parse_field
from .polyring import MonomialOrder, parse_polynomial, _tokenize


def _emit(report: harness.ExperimentReport, args) -> int:
    if args.json:
        print(report.to_json(timings=not args.no_timings))
    else:
        print(f"case: {report.case}")
        for key, value in report.inputs.items():
            print(f"  {key}: {value}")
        if report.lead_ideal is not None:
            print(f"lead ideal: ({', '.join(report.lead_ideal)})")
        if report.top_degree is not None:
            print(f"top degree: {report.top_degree}")
        if report.beta is not None:
            print(f"beta: {report.beta}")
        if report.degrees is not None:
            print(f"generator degrees: {dict(sorted(report.degrees.items()))}")
        for key, value in report.bounds.items():
            print(f"bound {key}: {value}")
        for key, value in report.details.items():
            if isinstance(value, (list, dict)) and len(value) > 12:
                value = f"<{len(value)} entries>"
            print(f"  {key}: {value}")
        for claim, ok in report.passed.items():
            print(f"[{'PASS' if ok else 'FAIL'}] {claim}")
    return 0 if report.ok else 1


def _read_gens(path: str, field):
    lines = []
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                lines.append(line)
    if not lines:
        raise SystemExit(f"{path}: no polynomials found")
    n = m = 1
    for line in lines:
        for tok in _tokenize(line):
            if tok[0] == "var":
                n = max(n, tok[1])
                m = max(m, tok[2] or 1)
    return [parse_polynomial(line, n, m, field) for line in lines]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polarinv", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--no-timings", action="store_true",
                        help="omit wall-clock timings from the JSON report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snlead", parents=[common], help="lead ideal of I(S_n, V)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-n", type=int, default=harness.MAX_SNLEAD_N)

    p = sub.add_parser("lemma-sweep", parents=[common],
                       help="exhaustive check of the recursive polarized lead")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--field", default="q", help="'q' or 'f<p>'")
    p.add_argument("--order", choices=["a", "b", "both"], default="both")
    p.add_argument("--unrestricted", action="store_true",
                   help="over GF(p), also sweep exponents >= p and report counterexamples")

    p = sub.add_parser("bound-check", parents=[common], help="degree bounds for I(G, V^m)")
    p.add_argument("--group", required=True, help="S3, A4, C5 or 'n=4; gens=(1 2)(3 4)'")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--strategy", choices=["goebel", "noether"], default="noether")
    p.add_argument("--cross-check", action="store_true")

    p = sub.add_parser("polarize", parents=[common], help="polarize a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", default=None, help="comma separated multi-index")

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis of a file of generators")
    p.add_argument("--gens", required=True, help="file with one polynomial per line")
    p.add_argument("--order", choices=["a", "b"], default="a")
    p.add_argument("--field", default="q")

    p = sub.add_parser("gb-polarize-test", parents=[common],
                       help="is a polarized GB of I(G, V) still a GB?")
    p.add_argument("--group", required=True)
    p.add_argument("--m", type=int, required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    cmd = args.command
    if cmd == "snlead":
        report = harness.cmd_snlead(args.n, max_n=args.max_n)
    elif cmd == "lemma-sweep":
        orders = [MonomialOrder.A, MonomialOrder.B] if args.order == "both" \
            else [MonomialOrder.parse(args.order)]
        fld = parse_field(args.field)
        if args.unrestricted:
            report = harness.cmd_modular_search(args.n, args.m, args.max_deg, fld, orders)
        else:
            report = harness.cmd_lemma_sweep(args.n, args.m, args.max_deg, fld, orders)
    elif cmd == "bound-check":
        report = harness.cmd_bound_check(args.group, args.m, args.strategy, args.cross_check)
    elif cmd == "polarize":
        poly = parse_polynomial(args.poly, m=1)
        k = None if args.k is None else tuple(int(x) for x in args.k.split(","))
        if k is not None and len(k) != args.m:
            raise SystemExit(f"--k has {len(k)} entries but --m is {args.m}")
        report = harness.cmd_polarize(poly, args.m, k)
    elif cmd == "gb":
        polys = _read_gens(args.gens, parse_field(args.field))
        report = harness.cmd_gb(polys, MonomialOrder.parse(args.order))
    else:
        report = harness.cmd_polarized_gb_test(args.group, args.m)
    return _emit(report, args)


if __name__ == "__main__":
    sys.exit(main())
