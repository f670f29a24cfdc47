"""Command line interface.

Exit codes: 0 success, 1 bad input, 2 incomplete sublink data, 3 a
verification check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .chorddiag import enumerate_chains, enumerate_essential, enumerate_infected, format_diagram, sorted_diagrams
from .chorddiag import parse_diagram
from .closure import iota_theta
from .errors import CassonError, IncompleteDataError
from .invariants import mu
from .io import format_rational, load_input, parse_components
from .links import conway, sublink
from .surgery import lambda_L
from .verify import SUITES, run_suite

EXIT_INPUT, EXIT_INCOMPLETE, EXIT_VERIFY = 1, 2, 3

_CLASSES = ("chain", "essential-plus", "essential-minus", "infected")


def _emit(args: argparse.Namespace, payload: dict, text: str) -> None:
    print(json.dumps(payload, indent=2) if args.json else text)


def _poly_text(coeffs: Sequence[object]) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        c = format_rational(c)  # type: ignore[arg-type]
        mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        if not mono:
            terms.append(c)
        elif c in ("1", "-1"):
            terms.append(("-" if c == "-1" else "") + mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms).replace("+ -", "- ") or "0"


def cmd_lambda(args: argparse.Namespace) -> int:
    data, _ = load_input(args.input)
    report = lambda_L(data)
    d = report.as_dict()
    lines = [f"lambda_L = {d['lambda_L']}", f"det = {d['det']}", f"betti1 = {d['betti1']}",
             f"|H1| = {d['h1_order']}", f"sigma = ({d['sigma_plus']}, {d['sigma_minus']})"]
    if d["lambda_walker"] is not None:
        lines.append(f"lambda_W = {d['lambda_walker']}")
    _emit(args, d, "\n".join(lines))
    return 0


def cmd_conway(args: argparse.Namespace) -> int:
    data, link = load_input(args.input)
    comps = parse_components(args.sublink, data.n) if args.sublink else list(range(data.n))
    if link is not None:
        coeffs = [c for c in conway(sublink(link, comps))]
    else:
        data.coeff(comps, 0)  # raises when the sublink is missing
        coeffs = list(data.conway[frozenset(comps)])
    payload = {"sublink": [c + 1 for c in comps], "conway": [format_rational(c) for c in coeffs]}
    _emit(args, payload, _poly_text(coeffs))
    return 0


def cmd_mu(args: argparse.Namespace) -> int:
    data, _ = load_input(args.input)
    comps = parse_components(args.components, data.n) if args.components else list(range(data.n))
    value = format_rational(mu(data, comps))
    _emit(args, {"components": [c + 1 for c in comps], "mu": value}, value)
    return 0


def cmd_iota_theta(args: argparse.Namespace) -> int:
    D = parse_diagram(args.diagram)
    value = format_rational(iota_theta(D))
    _emit(args, {"diagram": format_diagram(D), "iota_theta": value}, value)
    return 0


def cmd_diagrams(args: argparse.Namespace) -> int:
    n = args.circles
    if args.max_size is not None and n > args.max_size:
        raise argparse.ArgumentTypeError(f"--circles {n} exceeds --max-size {args.max_size}")
    if args.cls == "chain":
        found = enumerate_chains(n)
    elif args.cls == "infected":
        found = enumerate_infected(n)
    else:
        found = enumerate_essential(n, "+" if args.cls == "essential-plus" else "-")
    listing = [format_diagram(D) for D in sorted_diagrams(found)]
    payload = {"class": args.cls, "circles": n, "count": len(listing), "diagrams": listing}
    _emit(args, payload, "\n".join(listing + [f"count: {len(listing)}"]))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = {name: run_suite(name, args.seed, args.max_size) for name in names}
    ok = all(c.passed for checks in results.values() for c in checks)
    payload = {
        "seed": args.seed,
        "passed": ok,
        "suites": {
            name: [{"check": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
            for name, checks in results.items()
        },
    }
    lines = [
        f"{'PASS' if c.passed else 'FAIL'}  {name}: {c.name} ({c.detail})"
        for name, checks in results.items()
        for c in checks
    ]
    _emit(args, payload, "\n".join(lines))
    return 0 if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for random instances")
    common.add_argument("--max-size", type=int, default=None, help="cap on enumeration and check sizes")

    p = argparse.ArgumentParser(prog="casson-lmo", description="Casson-Walker-Lescop invariant of integral surgery.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lambda", parents=[common], help="invariant of the surgered manifold")
    s.add_argument("--input", required=True, help="JSON file, or - for stdin")
    s.set_defaults(func=cmd_lambda)

    s = sub.add_parser("conway", parents=[common], help="Conway polynomial of a sublink")
    s.add_argument("--input", required=True)
    s.add_argument("--sublink", help="1-based components, e.g. 1,3 (default: all)")
    s.set_defaults(func=cmd_conway)

    s = sub.add_parser("mu", parents=[common], help="mu invariant of a sublink")
    s.add_argument("--input", required=True)
    s.add_argument("--components", help="1-based components, e.g. 1,2,3 (default: all)")
    s.set_defaults(func=cmd_mu)

    s = sub.add_parser("iota-theta", parents=[common], help="theta coefficient of a chord diagram")
    s.add_argument("diagram", help="e.g. '1 | (1,0)-(1,2); (1,1)-(1,3)'")
    s.set_defaults(func=cmd_iota_theta)

    s = sub.add_parser("diagrams", help="chord diagram listings")
    dsub = s.add_subparsers(dest="action", required=True)
    e = dsub.add_parser("enumerate", parents=[common], help="list a class of diagrams")
    e.add_argument("--class", dest="cls", choices=_CLASSES, required=True)
    e.add_argument("--circles", type=int, required=True)
    e.set_defaults(func=cmd_diagrams)

    s = sub.add_parser("verify", parents=[common], help="run self-checks")
    s.add_argument("--suite", choices=("all",) + tuple(SUITES), default="all")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        return args.func(args)
    except IncompleteDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except (CassonError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
