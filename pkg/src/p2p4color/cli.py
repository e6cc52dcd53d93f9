"""Command-line front end.

Every subcommand prints one JSON report on stdout.  Exit status: 0 on
success, 1 on a structure violation, refuted certificate or failed
verification, 2 on parse or usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .clique import max_clique
from .colorers import COLORERS, StructureViolation, color, verify_coloring
from .detect import is_in_class, pattern
from .gen import (CLASS_FORBIDDEN, DEFAULT_DENSITY, GenSpec, SamplingExhausted, named_graph,
                  random_cograph, random_in_class_with_tries)
from .graph import Graph
from .io import GraphFormatError, read_graph, write_graph
from .oracle import DEFAULT_MAX_N, OracleRefused, chromatic_number
from .perfection import REFUTED, certify_perfect, exhaustive_perfection
from .wagon import verify_structure, wagon_partition

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(args) -> Graph:
    if (args.input is None) == (args.name is None):
        raise UsageError("give exactly one of --input or --name")
    if args.name is not None:
        try:
            return named_graph(args.name)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        return read_graph(args.input, args.format)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None


def _cmd_check(args, g: Graph) -> tuple[dict, int]:
    try:
        pats = [pattern(p) for p in args.forbid.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return is_in_class(g, pats).to_dict(), EXIT_OK


def _cmd_partition(args, g: Graph) -> tuple[dict, int]:
    p = wagon_partition(g, max_clique(g))
    report = verify_structure(g, p, args.cls)
    return {"partition": p.summary(), "structure": report.to_dict()}, EXIT_OK if report.ok else EXIT_FAIL


def _cmd_color(args, g: Graph) -> tuple[dict, int]:
    try:
        c = color(g, args.cls, strict=args.strict)
    except StructureViolation as exc:
        return {"class": args.cls, "violation": exc.to_dict()}, EXIT_FAIL
    out = {"class": c.class_tag, "omega": max_clique(g).size, "bound": c.bound,
           "colors_used": c.colors_used, "assignment": list(c.assignment), "arm": c.arm}
    code = EXIT_OK
    if args.verify:
        bad = verify_coloring(g, c)
        check = {"proper": bad is None}
        if bad is not None:
            check["violating_edge"] = list(bad)
            code = EXIT_FAIL
        try:
            chi = chromatic_number(g).chi
            check["oracle_chi"] = chi
            if chi > c.colors_used:
                code = EXIT_FAIL
        except OracleRefused as exc:
            check["oracle_chi"] = f"skipped: {exc}"
        out["verify"] = check
    return out, code


def _cmd_oracle(args, g: Graph) -> tuple[dict, int]:
    try:
        r = chromatic_number(g, max_n=args.max_n)
    except OracleRefused as exc:
        raise UsageError(str(exc)) from None
    return {"chi": r.chi, "assignment": list(r.witness.assignment)}, EXIT_OK


def _cmd_certify(args, g: Graph) -> tuple[dict, int]:
    cert = certify_perfect(g, corroborate=not args.no_scan)
    out = cert.to_dict()
    code = EXIT_FAIL if cert.conclusion == REFUTED else EXIT_OK
    if args.verify:
        try:
            ok = exhaustive_perfection(g)
            out["exhaustive_perfection"] = ok
            if cert.conclusion == "perfect" and not ok:
                code = EXIT_FAIL
        except OracleRefused as exc:
            out["exhaustive_perfection"] = f"skipped: {exc}"
    return out, code


def _cmd_gen(args) -> tuple[dict, int]:
    if args.cls == "cograph":
        g = random_cograph(args.n, args.seed)
        tries = 1
    else:
        if args.forbid:
            try:
                forbidden = tuple(pattern(p) for p in args.forbid.split(",") if p.strip())
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        else:
            forbidden = CLASS_FORBIDDEN[args.cls]
        p = args.p if args.p is not None else DEFAULT_DENSITY[args.cls]
        try:
            spec = GenSpec(args.n, p, forbidden, args.seed, args.max_tries)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        try:
            g, tries = random_in_class_with_tries(spec)
        except SamplingExhausted as exc:
            return {"exhausted": str(exc)}, EXIT_FAIL
    out = {"n": g.n, "m": g.m, "tries": tries}
    if args.out:
        write_graph(g, args.out, args.format)
        out["written"] = args.out
    else:
        out["edges"] = [list(e) for e in g.edges()]
    return out, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="p2p4color", description=__doc__.splitlines()[0])
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--input", help="graph file (.col = DIMACS, otherwise JSON)")
    source.add_argument("--name", help="named graph, e.g. grotzsch, two-K5s, clique-plus-pendant(5)")
    source.add_argument("--format", choices=["dimacs", "json"], help="override the file format")
    source.add_argument("--seed", type=int, help="accepted everywhere; only gen draws random numbers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[source], help="forbidden induced subgraph report")
    p.add_argument("--forbid", default="p2p4,diamond",
                   help="comma list from p2p4, diamond, gem, butterfly, c5, c7, p4, K<t>, C<k>")

    classes = sorted(COLORERS)
    p = sub.add_parser("partition", parents=[source], help="clique partition and structural facts")
    p.add_argument("--class", dest="cls", choices=classes, default="diamond")

    p = sub.add_parser("color", parents=[source], help="colour within the class bound")
    p.add_argument("--class", dest="cls", choices=classes, required=True)
    p.add_argument("--strict", action="store_true", help="check class membership first")
    p.add_argument("--verify", action="store_true", help="re-check properness and compare with the oracle")

    p = sub.add_parser("oracle", parents=[source], help="exact chromatic number")
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)

    p = sub.add_parser("certify-perfect", parents=[source], help="perfection certificate")
    p.add_argument("--verify", action="store_true", help="exhaustive χ = ω check on every induced subgraph (n <= 12)")
    p.add_argument("--no-scan", action="store_true", help="skip the odd hole / antihole corroboration scans")

    p = sub.add_parser("gen", help="sample a graph")
    p.add_argument("--class", dest="cls", choices=sorted(CLASS_FORBIDDEN) + ["cograph"], default="diamond")
    p.add_argument("--forbid", help="explicit forbidden pattern list (overrides --class)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--max-tries", type=int, default=10000)
    p.add_argument("--out")
    p.add_argument("--format", choices=["dimacs", "json"])
    return parser


HANDLERS = {
    "check": _cmd_check,
    "partition": _cmd_partition,
    "color": _cmd_color,
    "oracle": _cmd_oracle,
    "certify-perfect": _cmd_certify,
}


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    report = {"command": " ".join(argv)}
    try:
        if args.command == "gen":
            result, code = _cmd_gen(args)
        else:
            g = _load(args)
            report["input"] = {"n": g.n, "m": g.m}
            result, code = HANDLERS[args.command](args, g)
    except (UsageError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report["result"] = result
    report["exit"] = code
    json.dump(report, out, indent=2)
    out.write("\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
