"""Command-line front-end.

Exit codes: 0 success (including "no errors" and "no witness"), 1 when
validation reports errors, 2 on usage, parse, or engine failures.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import service
from .errors import OntrustError


def _read(path: str) -> bytes:
    return Path(path).read_bytes()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ontrust", description="ONTrust instance-model engine"
    )
    parser.add_argument("--version", action="version", version=service.version_string())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a model against all axioms")
    p.add_argument("file")

    p = sub.add_parser("classify", help="classify trust nodes in the lattice")
    p.add_argument("file")
    p.add_argument("--trust", help="restrict to one trust id")

    p = sub.add_parser("degree", help="compute trust degrees in a context")
    p.add_argument("file")
    p.add_argument("--context", required=True)
    p.add_argument("--scale", choices=["lmh", "0-100"])
    p.add_argument("--trust", help="restrict to one trust id")

    p = sub.add_parser("risk", help="derive risk chains")
    p.add_argument("file")

    p = sub.add_parser("find", help="bounded model finding")
    p.add_argument("--sig", required=True, help="signature file (ontrust-sig/1)")
    p.add_argument("--disable", action="append", default=[], metavar="AXIOM")
    p.add_argument("--property", required=True, dest="property_text", metavar="P")
    p.add_argument("--bound", type=int)

    p = sub.add_parser("export", help="export the model")
    p.add_argument("file")
    p.add_argument("--format", choices=["triples"], default="triples")
    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "validate":
        graph, _ = service.load_document(_read(args.file))
        result = service.run_validate(graph)
        sys.stdout.write(result.text)
        return 1 if result.errors else 0
    if args.command == "classify":
        graph, _ = service.load_document(_read(args.file))
        sys.stdout.write(service.classification_text(service.run_classify(graph, args.trust)))
        return 0
    if args.command == "degree":
        graph, contexts = service.load_document(_read(args.file))
        reports = service.run_degree(graph, contexts, args.context, args.scale, args.trust)
        sys.stdout.write(service.degree_text(reports))
        return 0
    if args.command == "risk":
        graph, _ = service.load_document(_read(args.file))
        sys.stdout.write(service.risk_text(graph, service.run_risk(graph)))
        return 0
    if args.command == "find":
        witness = service.run_find(
            _read(args.sig), args.property_text, args.disable, args.bound
        )
        sys.stdout.write(service.find_text(witness))
        return 0
    if args.command == "export":
        graph, _ = service.load_document(_read(args.file))
        sys.stdout.buffer.write(service.run_export(graph))
        return 0
    raise AssertionError(f"unhandled command {args.command}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help/--version and 2 for usage errors
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except (OntrustError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
