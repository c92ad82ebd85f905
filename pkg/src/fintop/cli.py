"""fintop command-line interface.

Exit codes: 0 success / property true, 1 property false, 2 invalid input,
3 size limit.  With --json exactly one JSON document goes to stdout;
diagnostics always go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import core, enumeration, reflectors, separation
from .core import NotATopology, SizeLimit

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INVALID = 2
EXIT_SIZE = 3

AXIOMS = separation.SIGNATURE_FIELDS


def _load_space(path: str) -> core.FiniteSpace:
    with open(path) as fh:
        return core.space_from_doc(json.load(fh))


def _profile_dict(profile: separation.SeparationProfile) -> dict:
    return {name: getattr(profile, name) for name in AXIOMS}


def _report_dict(rep: reflectors.PreHausdorffReport) -> dict:
    return {
        "by_definition": rep.by_definition,
        "r0_closed": rep.r0_closed,
        "r0_equals_diagonal_closure": rep.r0_equals_diagonal_closure,
        "quotient_hausdorff": rep.quotient_hausdorff,
        "r0_blocks": [sorted(core.members(b)) for b in rep.r0],
    }


def cmd_check(args) -> int:
    s = _load_space(args.file)
    profile = separation.axiom_profile(s)
    if args.axiom:
        value = getattr(profile, args.axiom)
        if args.json:
            print(json.dumps({"axiom": args.axiom, "value": value}))
        else:
            print("true" if value else "false")
        return EXIT_OK if value else EXIT_FALSE
    report = reflectors.pre_hausdorff_report(s)
    if args.json:
        print(json.dumps({
            "points": s.n,
            "profile": _profile_dict(profile),
            "pre_hausdorff": _report_dict(report),
        }))
    else:
        print(f"points: {s.n}  opens: {len(s.opens)}")
        for name in AXIOMS:
            print(f"  {name}: {str(getattr(profile, name)).lower()}")
        print("pre-Hausdorff characterizations:")
        for key, val in _report_dict(report).items():
            if key == "r0_blocks":
                print(f"  r0 partition: {val}")
            else:
                note = "n/a (size limit)" if val is None else str(val).lower()
                print(f"  {key}: {note}")
    return EXIT_OK


def cmd_reflect(args) -> int:
    s = _load_space(args.file)
    if args.axiom == "preh":
        out_space = reflectors.reflect_pre_hausdorff(s)
        doc = core.space_to_doc(out_space)
    else:
        i = {"t0": 0, "t1": 1, "t2": 2}[args.axiom]
        out_space, q = reflectors.reflect(s, i)
        doc = core.space_to_doc(out_space)
        doc["projection"] = list(q.table)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh)
            fh.write("\n")
    else:
        print(json.dumps(doc))
    print(f"points: {s.n} -> {out_space.n}", file=sys.stderr)
    return EXIT_OK


def cmd_count(args) -> int:
    if args.kind == "bell":
        print(enumeration.bell_number(args.n))
    else:
        print(enumeration.integer_partition_count(args.n))
    return EXIT_OK


def cmd_census(args) -> int:
    table = enumeration.census(
        args.n, workers=args.workers, allow_large=args.allow_large,
        progress=(lambda done, total: print(f"{done}/{total} sub-searches", file=sys.stderr))
        if args.n >= 6 else None,
    )
    with open(args.out, "w", newline="") as fh:
        fh.write(enumeration.census_to_csv(table))
    bell = enumeration.bell_number(args.n)
    verdict = "ok" if table.pre_hausdorff_total == bell else "MISMATCH"
    print(f"total={table.total} preH={table.pre_hausdorff_total} bell_check={verdict}")
    return EXIT_OK if verdict == "ok" else EXIT_FALSE


def cmd_homeomorphic(args) -> int:
    a = _load_space(args.file_a)
    b = _load_space(args.file_b)
    fast = separation.is_pre_hausdorff(a) and separation.is_pre_hausdorff(b)
    result = enumeration.are_homeomorphic(a, b)
    path = "fast" if fast else "general"
    print(f"{'true' if result else 'false'} ({path} path)")
    return EXIT_OK if result else EXIT_FALSE


def cmd_example(args) -> int:
    s = core.example_space(args.name)
    doc = core.space_to_doc(s)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(doc, fh)
            fh.write("\n")
    else:
        print(json.dumps(doc))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fintop", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="axiom profile / pre-Hausdorff report of a space")
    p.add_argument("file")
    p.add_argument("--axiom", choices=AXIOMS)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reflect", help="reflect a space onto T0/T1/T2/pre-Hausdorff")
    p.add_argument("file")
    p.add_argument("--axiom", required=True, choices=["t0", "t1", "t2", "preh"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_reflect)

    p = sub.add_parser("count", help="exact Bell / integer-partition numbers")
    p.add_argument("kind", choices=["bell", "partitions"])
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("census", help="separation census of all topologies on n points")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("homeomorphic", help="decide homeomorphism of two spaces")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(func=cmd_homeomorphic)

    p = sub.add_parser("example", help="write a canonical named space")
    p.add_argument("name")
    p.add_argument("--out")
    p.set_defaults(func=cmd_example)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "workers", None) is None and args.command == "census":
        import os
        args.workers = os.cpu_count() or 1
    try:
        return args.func(args)
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (NotATopology, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
