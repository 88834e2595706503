"""Command-line front end.

Commands::

    knotgroups parse FILE                 echo the canonical presentation
    knotgroups alex FILE [--matrix]      Alexander polynomial (and matrix)
    knotgroups count FILE --group SPEC [--pin g=PERM | --marker NAME=PERM]
                    [--mode naive|backtrack] [--list] [--jobs N]
    knotgroups family --m M [--out FILE] write a family presentation file
    knotgroups verify [--deep] [--override FILE] [--jobs N]

Exit codes: 0 success, 1 verification failure, 2 input error,
3 budget or overflow refusal.

``--json`` emits a machine-readable report with sorted keys.  The JSON
payload contains only deterministic fields (no wall times), so byte-equal
reruns and ``--jobs`` independence can be asserted by callers; timings are
printed to stderr in text mode instead.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Dict, Optional

from . import verification
from .errors import InputError, InvalidParameterError, KnotGroupsError, ResourceError
from .fox import alexander_matrix, alexander_polynomial
from .homsearch import count_homs, meridian_search
from .permgroups import group_from_spec, parse_permutation
from .presentations import parse, rbg_family

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _read_presentation(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InvalidParameterError(f"cannot read {path}: {exc}") from None
    return parse(text)


def _emit(report: Dict, as_json: bool, text_lines, started: float) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)
        print(f"wall time: {time.perf_counter() - started:.3f}s", file=sys.stderr)


def cmd_parse(args) -> int:
    started = time.perf_counter()
    pres = _read_presentation(args.file)
    text = pres.render()
    report = {
        "command": "parse",
        "inputs": {"file": args.file},
        "results": {"presentation": text},
    }
    _emit(report, args.json, [text.rstrip("\n")], started)
    return EXIT_OK


def cmd_alex(args) -> int:
    started = time.perf_counter()
    pres = _read_presentation(args.file)
    poly = alexander_polynomial(pres)
    results = {"alexander_polynomial": str(poly)}
    lines = [str(poly)]
    if args.matrix:
        rows = alexander_matrix(pres).text_rows()
        results["matrix"] = rows
        lines.append(json.dumps(rows))
    report = {
        "command": "alex",
        "inputs": {"file": args.file},
        "results": results,
    }
    _emit(report, args.json, lines, started)
    return EXIT_OK


def _parse_binding(text: str, what: str) -> tuple:
    name, sep, literal = text.partition("=")
    if not sep or not name or not literal:
        raise InvalidParameterError(f"bad {what} {text!r}, expected NAME=PERM")
    return name, literal


def cmd_count(args) -> int:
    started = time.perf_counter()
    pres = _read_presentation(args.file)
    group = group_from_spec(args.group)
    jobs = args.jobs or os.cpu_count() or 1
    inputs = {
        "file": args.file,
        "group": args.group,
        "mode": args.mode,
    }
    if args.marker:
        name, literal = _parse_binding(args.marker, "--marker")
        sigma = parse_permutation(literal, group.degree)
        result = meridian_search(pres, name, group, sigma, mode=args.mode,
                                 materialize=args.list, jobs=jobs)
        inputs["marker"] = {name: str(sigma)}
    else:
        pins = {}
        for binding in args.pin or ():
            name, literal = _parse_binding(binding, "--pin")
            pins[name] = parse_permutation(literal, group.degree)
        result = count_homs(pres, group, pins, mode=args.mode,
                            materialize=args.list, jobs=jobs)
        inputs["pins"] = {name: str(p) for name, p in pins.items()}
    results: Dict = {"count": result.count}
    lines = [f"count = {result.count}"]
    if args.list:
        listed = [
            {g: str(assignment[g]) for g in pres.generators}
            for assignment in result.assignments
        ]
        results["assignments"] = listed
        lines.extend(
            "  " + "  ".join(f"{g}={a[g]}" for g in pres.generators) for a in listed
        )
    report = {
        "command": "count",
        "inputs": inputs,
        "results": results,
        "stats": {
            "nodes": result.stats.nodes,
            "relator_checks": result.stats.relator_checks,
        },
    }
    _emit(report, args.json, lines, started)
    return EXIT_OK


def cmd_family(args) -> int:
    text = rbg_family(args.m).render()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


def cmd_verify(args) -> int:
    started = time.perf_counter()
    override = _read_presentation(args.override) if args.override else None
    jobs = args.jobs or 1
    outcomes = verification.run_all(deep=args.deep, jobs=jobs,
                                    family_override=override)
    all_ok = all(o.ok for o in outcomes)
    report = {
        "command": "verify",
        "inputs": {"deep": args.deep, "expectations_version":
                   verification.EXPECTATIONS_VERSION},
        "results": {
            "all_ok": all_ok,
            "checks": [
                {
                    "name": o.name,
                    "passed": o.passed,
                    "within_budget": o.within_budget,
                    "ok": o.ok,
                    "detail": o.detail,
                }
                for o in outcomes
            ],
        },
    }
    lines = [o.status_line() for o in outcomes]
    lines.append("all checks passed" if all_ok else "SOME CHECKS FAILED")
    _emit(report, args.json, lines, started)
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="knotgroups",
        description="Knot-group invariants: Alexander polynomials via the "
                    "free differential calculus, and meridian-pinned "
                    "homomorphism counts into finite permutation groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="parse a presentation file and echo it")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_parse)

    p = sub.add_parser("alex", help="Alexander polynomial of a presentation")
    p.add_argument("file")
    p.add_argument("--matrix", action="store_true",
                   help="also print the derivative matrix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_alex)

    p = sub.add_parser("count", help="count homomorphisms into a finite group")
    p.add_argument("file")
    p.add_argument("--group", required=True,
                   help="target group: S4, A5, or gen:DEGREE:[(..),(..)]")
    pin_group = p.add_mutually_exclusive_group()
    pin_group.add_argument("--pin", action="append", metavar="GEN=PERM",
                           help="pin a generator image (repeatable)")
    pin_group.add_argument("--marker", metavar="NAME=PERM",
                           help="pin the image of a named marker word")
    p.add_argument("--mode", choices=("naive", "backtrack"),
                   default="backtrack")
    p.add_argument("--list", action="store_true",
                   help="list the homomorphisms found")
    p.add_argument("--jobs", type=int, default=0,
                   help="worker threads (default: all cores)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("family", help="emit a member of the presentation family")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("verify", help="run the pinned verification suite")
    p.add_argument("--deep", action="store_true",
                   help="include the slow large-parameter checks")
    p.add_argument("--override", metavar="FILE",
                   help="replace the m=1 family presentation (negative testing)")
    p.add_argument("--jobs", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except KnotGroupsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
