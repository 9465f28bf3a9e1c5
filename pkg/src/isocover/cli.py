"""``isocover`` command line.

Exit codes: 0 every check passed, 1 some check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import certificate_io
from .constructions import build_three_cover_wall, build_tree_cover, build_two_cover
from .errors import DomainError, InputError, SizeLimitError
from .formats import read_graph6_file, to_dot, to_graph6
from .graph import wall
from .incidence import greedy_coloring, wall_3_coloring
from .verifiers import verify_certificate
from .widths import oracle_bound, widths_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _source(args):
    if args.order is not None:
        if args.order < 1:
            raise InputError("--order must be positive")
        return wall(args.order)
    return read_graph6_file(args.input)


def generate(args) -> int:
    family = args.family
    if family in ("k4", "k3") and args.order is None:
        raise InputError(f"family {family} is built on a wall; pass --order N")
    if family == "k4":
        cert = build_tree_cover(wall(args.order), wall_3_coloring(args.order))
    elif family == "k3":
        cert = build_three_cover_wall(args.order)
    elif family == "trees":
        X = _source(args)
        cert = build_tree_cover(X, greedy_coloring(X))
    else:
        cert = build_two_cover(_source(args))
    cert = type(cert)(cert.graph, cert.source, cert.subdivision, cert.parts, family)
    results = verify_certificate(cert)
    failed = [r for r in results if not r]
    if failed:
        for r in failed:
            print(f"FAIL {r.check}: {r.detail}", file=sys.stderr)
        print("generated certificate failed verification; nothing written", file=sys.stderr)
        return EXIT_FAIL
    certificate_io.save(cert, args.out)
    print(f"wrote {args.out}: {family}, {cert.graph.n} vertices, {cert.graph.m} edges, "
          f"{len(cert.parts)} parts, {len(results)} checks passed")
    return EXIT_OK


def verify(args) -> int:
    cert = certificate_io.load(args.cert)
    results = verify_certificate(cert)
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=2))
    else:
        for r in results:
            line = f"{'PASS' if r else 'FAIL'} {r.check}"
            if r.detail:
                line += f" ({r.detail})" if r else f": {r.detail}"
            print(line)
    return EXIT_OK if all(results) else EXIT_FAIL


def export(args) -> int:
    cert = certificate_io.load(args.cert)
    if not cert.parts:
        raise InputError("certificate has no parts to export")
    if args.format == "graph6":
        text = to_graph6(cert.graph) + "\n"
    else:
        membership = {}
        for i, part in enumerate(cert.parts):
            for v in part.vertices:
                membership.setdefault(v, []).append(i)
        text = to_dot(cert.graph, membership, name=cert.family or "G")
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.out}")
    return EXIT_OK


def widths(args) -> int:
    G = read_graph6_file(args.graph)
    report = widths_report(G, args.bound)
    print(json.dumps(report, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isocover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a cover certificate and verify it")
    p.add_argument("--family", required=True, choices=["trees", "k4", "k3", "k2"])
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--order", type=int, help="use the wall of this order as source")
    src.add_argument("--input", help="graph6 file holding the source graph")
    p.add_argument("--out", required=True)
    p.set_defaults(func=generate)

    p = sub.add_parser("verify", help="run the full verifier suite on a certificate")
    p.add_argument("cert")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.set_defaults(func=verify)

    p = sub.add_parser("export", help="write the certificate graph as DOT or graph6")
    p.add_argument("cert")
    p.add_argument("--format", required=True, choices=["dot", "graph6"])
    p.add_argument("--out", required=True)
    p.set_defaults(func=export)

    p = sub.add_parser("widths", help="exact treewidth, pathwidth and treedepth")
    p.add_argument("graph", help="graph6 file")
    p.add_argument("--bound", type=int, default=None,
                   help="vertex limit for the exact oracles (default: $ISOCOVER_ORACLE_BOUND or built-in)")
    p.set_defaults(func=widths)
    return parser


def main(argv=None) -> int:
    for stream in (sys.stdout, sys.stderr):
        try:
            stream.reconfigure(encoding="utf-8", line_buffering=True)
        except AttributeError:  # replaced stream, e.g. under capture
            pass
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if getattr(args, "bound", None) is None and args.command == "widths":
            args.bound = oracle_bound()
        return args.func(args)
    except (InputError, DomainError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:  # reader went away, e.g. `| head`
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
