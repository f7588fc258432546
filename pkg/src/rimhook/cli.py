"""Command-line front end: ``rimhook verify | count | convert | render``.

Exit status is 0 on success, 1 when a verification or count check fails,
and 2 for usage or input-format errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from rimhook import codec, enumeration, render, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_CELLS = 240
# what a malformed or out-of-domain record can raise while being decoded or mapped
RECORD_ERRORS = (ValueError, KeyError, TypeError, AttributeError, IndexError, AssertionError)


class UsageError(Exception):
    pass


def max_cells() -> int:
    raw = os.environ.get("RIMHOOK_MAX_CELLS")
    if raw is None:
        return DEFAULT_MAX_CELLS
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"RIMHOOK_MAX_CELLS must be an integer, got {raw!r}") from None
    if cap < 0:
        raise UsageError("RIMHOOK_MAX_CELLS must be nonnegative")
    return cap


def _check_cap(cells: int, what: str) -> None:
    cap = max_cells()
    if cells > cap:
        raise UsageError(f"{what} needs shapes of {cells} cells, over the RIMHOOK_MAX_CELLS limit of {cap}")


# -- verify ----------------------------------------------------------------------

def _run(job: tuple[str, int, int, int | None]) -> verify.VerificationReport:
    return verify.run_suite(*job)


def cmd_verify(args) -> int:
    if args.m < 1 or args.n_max < 0:
        raise UsageError("need --m >= 1 and --n-max >= 0")
    names = sorted(verify.SUITES) if args.suite == "all" else [args.suite]
    _check_cap(max(args.m, 2) * args.n_max, "verification")
    jobs = [(name, args.m, args.n_max, args.seed) for name in names]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run, jobs))
    else:
        reports = [_run(j) for j in jobs]
    reports.sort(key=lambda r: (r.suite, json.dumps(r.params, sort_keys=True)))
    passed = all(r.passed for r in reports)

    if args.report:
        doc = {"passed": passed, "reports": [r.to_dict(args.timing) for r in reports]}
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    if args.json:
        print(json.dumps({"passed": passed, "reports": [r.to_dict(args.timing) for r in reports]}, sort_keys=True, indent=2))
    else:
        for r in reports:
            print(r.to_text(args.timing))
        print("overall:", "PASS" if passed else "FAIL")
    return EXIT_OK if passed else EXIT_FAIL


# -- count -----------------------------------------------------------------------

def cmd_count(args) -> int:
    if args.family not in enumeration.FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(enumeration.FAMILIES)}")
    if args.n is None and args.n_max is None:
        raise UsageError("count needs --n or --n-max")
    ns = [args.n] if args.n is not None else list(range(args.n_max + 1))
    if min(ns) < 0 or args.m < 1:
        raise UsageError("need n >= 0 and m >= 1")
    _check_cap(max(args.m, 2) * max(ns), "counting")
    rows = []
    for n in ns:
        got = enumeration.count_family(args.family, n, args.m)
        want = enumeration.closed_form(args.family, n, args.m)
        rows.append({"n": n, "count": got, "closed_form": want, "ok": got == want})
    ok = all(r["ok"] for r in rows)
    if args.json:
        print(json.dumps({"family": args.family, "m": args.m, "rows": rows}, sort_keys=True))
    elif args.n is not None:
        print(rows[0]["count"])
    else:
        header = ("n", "count", "closed form", "")
        table = [header] + [(str(r["n"]), str(r["count"]), str(r["closed_form"]), "ok" if r["ok"] else "MISMATCH") for r in rows]
        widths = [max(len(row[i]) for row in table) for i in range(4)]
        for row in table:
            print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip())
    return EXIT_OK if ok else EXIT_FAIL


# -- convert ---------------------------------------------------------------------

def convert_lines(lines, src: str, dst: str, out, err) -> int:
    """Convert a JSON-lines stream; returns the number of rejected records."""
    cap = max_cells()
    bad = 0
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
            if codec.record_cells(obj, src) > cap:
                raise ValueError(f"record exceeds RIMHOOK_MAX_CELLS={cap}")
            result = codec.convert_record(obj, src, dst)
        except RECORD_ERRORS as exc:
            bad += 1
            print(f"line {lineno}: {type(exc).__name__}: {exc}", file=err)
            continue
        print(json.dumps(result, separators=(",", ":")), file=out)
    return bad


def cmd_convert(args) -> int:
    src, dst = getattr(args, "from"), args.to
    if (src, dst) not in codec.CONVERSIONS:
        pairs = ", ".join(f"{a}->{b}" for a, b in sorted(codec.CONVERSIONS))
        raise UsageError(f"unsupported conversion {src}->{dst}; supported: {pairs}")
    if args.input and args.input != "-":
        with open(args.input, encoding="utf-8") as fh:
            bad = convert_lines(fh, src, dst, sys.stdout, sys.stderr)
    else:
        bad = convert_lines(sys.stdin, src, dst, sys.stdout, sys.stderr)
    return EXIT_USAGE if bad else EXIT_OK


# -- render ----------------------------------------------------------------------

def _guess_kind(obj) -> str:
    if isinstance(obj, list):
        return "partition"
    if isinstance(obj, str):
        return "guywalk"
    if isinstance(obj, dict):
        if "arcs" in obj:
            return "matching"
        if "shapes" in obj:
            return "oscillating"
        if "D" in obj:
            return "packing"
        if "P" in obj:
            return "pair"
        if "hooks" in obj and obj["hooks"] and "cells" in obj["hooks"][0]:
            return "tableau"
        if "hooks" in obj:
            return "hookperm"
    raise ValueError("cannot tell what kind of object this is; pass --kind")


def render_object(obj, kind: str | None = None) -> str:
    kind = kind or _guess_kind(obj)
    if kind == "partition":
        return render.young_diagram(codec.partition_from_json(obj))
    if kind == "tableau":
        return render.tableau(codec.tableau_from_json(obj))
    if kind == "pair":
        P, Q = codec.pair_from_json(obj)
        return "P:\n" + render.tableau(P) + "\nQ:\n" + render.tableau(Q)
    if kind == "hookperm":
        hp = codec.hookperm_from_json(obj)
        return "\n\n".join(f"content {h.content}:\n" + render.tableau(h.tableau()) for h in hp.hooks)
    if kind == "matching":
        return render.arcs(codec.matching_from_json(obj))
    if kind == "oscillating":
        return render.oscillating(codec.oscillating_from_json(obj))
    if kind == "packing":
        return render.packing(codec.packing_from_json(obj))
    if kind == "guywalk":
        return render.walk(codec.guywalk_from_json(obj))
    raise ValueError(f"unknown kind {kind!r}")


RENDER_KINDS = ("partition", "tableau", "pair", "hookperm", "matching", "oscillating", "packing", "guywalk")


def cmd_render(args) -> int:
    text = args.object if args.object is not None else sys.stdin.read()
    try:
        obj = json.loads(text)
        print(render_object(obj, args.kind))
    except RECORD_ERRORS as exc:
        raise UsageError(f"cannot render: {exc}") from exc
    return EXIT_OK


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rimhook", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run exhaustive verification suites")
    v.add_argument("--suite", default="all", choices=("all", *verify.SUITES))
    v.add_argument("--m", type=int, default=2)
    v.add_argument("--n-max", type=int, default=3)
    v.add_argument("--seed", type=int, default=None, help="also run random spot checks beyond n-max")
    v.add_argument("--jobs", type=int, default=1, help="run suites in parallel processes")
    v.add_argument("--report", metavar="PATH", help="write the JSON report here")
    v.add_argument("--json", action="store_true", help="print JSON instead of text")
    v.add_argument("--timing", action="store_true", help="include wall-clock seconds (breaks byte stability)")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("count", help="count a family by exhaustive generation")
    c.add_argument("--family", required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--n-max", type=int)
    c.add_argument("--m", type=int, default=2)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_count)

    k = sub.add_parser("convert", help="map JSON-lines records through a bijection")
    k.add_argument("--from", required=True, choices=sorted(codec.FORMATS))
    k.add_argument("--to", required=True, choices=sorted(codec.FORMATS))
    k.add_argument("--input", help="input file (default stdin)")
    k.set_defaults(func=cmd_convert)

    r = sub.add_parser("render", help="draw an object as ASCII art")
    r.add_argument("object", nargs="?", help="JSON value (default: read stdin)")
    r.add_argument("--kind", choices=RENDER_KINDS)
    r.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"rimhook: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
