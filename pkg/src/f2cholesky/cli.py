"""Command line front end.

Subcommands: count, census, roots, press, asymptotics, verify.  Output is
byte-deterministic for identical invocations; numbers inside JSON are
decimal strings so arbitrary-precision values survive the trip.  Exit codes:
0 success, 1 a computation completed but a check or agreement failed (or the
request is out of reach of the exhaustive engines), 2 malformed input.
"""

from __future__ import annotations

import argparse
import os
import sys
import json
from fractions import Fraction

from . import asymptotics, census, counting, pressing, verify
from .bounded import sci_string
from .gf2 import GF2Matrix, NotLpnError, parse_matrix, rank_profile, render_matrix

ENV_SHARDS = "F2CHOLESKY_SHARDS"

_BRACKET_LO = Fraction(7, 10**7)
_BRACKET_HI = Fraction(8, 10**7)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _default_shards() -> int:
    raw = os.environ.get(ENV_SHARDS)
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_SHARDS} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{ENV_SHARDS} must be at least 1, got {value}")
    return value


def _matrix_text_lines(m: GF2Matrix) -> list[str]:
    return render_matrix(m).splitlines()


def _count_one(tag: str, n: int, rank: int | None, method: str, shards: int) -> int:
    if method == "brute":
        if rank is not None:
            return census.census_by_rank(tag, n, "brute").counts[rank]
        if shards == 1:
            return census.count_class(tag, n)
        return sum(
            census.count_class(tag, n, shard_index=i, shard_count=shards)
            for i in range(shards)
        )
    if method == "extend":
        table = census.census_by_rank(tag, n, "extend")
        return table.counts[rank] if rank is not None else table.total
    if method == "recurrence":
        table = counting.rank_table(tag, n)
        return table.counts[rank] if rank is not None else table.total
    if method == "closed-form":
        return counting.closed_form_count(n)
    if method == "unified":
        return counting.unified_count(n)
    raise ValueError(f"unknown method {method!r}")


def cmd_count(args: argparse.Namespace) -> int:
    tag, n, rank = args.cls, args.n, args.rank
    if rank is not None and not 0 <= rank <= n:
        print(f"error: rank {rank} outside 0..{n}", file=sys.stderr)
        return 2
    shards = args.shards if args.shards is not None else _default_shards()
    if args.all_methods:
        methods = ["recurrence"]
        if rank is None:
            methods += ["closed-form", "unified"]
        if n <= census.BRUTE_CAPS[tag]:
            methods.insert(0, "brute")
        if tag in ("B", "C") and n <= census.EXTEND_CAP and "brute" not in methods:
            methods.insert(0, "extend")
    else:
        methods = [args.method or ("recurrence" if rank is not None else "closed-form")]
    if rank is not None:
        bad = [m for m in methods if m in ("closed-form", "unified")]
        if bad:
            print(f"error: {bad[0]} counts totals only, not rank strata", file=sys.stderr)
            return 2
    try:
        values = {m: _count_one(tag, n, rank, m, shards) for m in methods}
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    agree = len(set(values.values())) == 1
    if args.format == "json":
        payload = {
            "class": tag,
            "n": n,
            "rank": rank,
            "counts": {m: str(v) for m, v in values.items()},
            "agree": agree,
        }
        print(json.dumps(payload, indent=2))
    elif len(values) == 1:
        print(next(iter(values.values())))
    else:
        for m in methods:
            print(f"{m}: {values[m]}")
        print(f"agree: {'yes' if agree else 'NO'}")
    return 0 if agree else 1


def cmd_census(args: argparse.Namespace) -> int:
    tag, n = args.cls, args.n
    if args.enumerate:
        if args.format == "csv":
            print("error: enumeration output has no csv form", file=sys.stderr)
            return 2
        shard_index = args.shard_index if args.shard_index is not None else 0
        shard_count = args.shard_count if args.shard_count is not None else 1
        try:
            stream = list(
                census.enumerate_class(
                    tag, n, shard_index=shard_index, shard_count=shard_count
                )
            )
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        if args.format == "json":
            payload = {
                "class": tag,
                "n": n,
                "shard_index": shard_index,
                "shard_count": shard_count,
                "matrices": [_matrix_text_lines(m) for m in stream],
            }
            print(json.dumps(payload, indent=2))
        else:
            print("\n\n".join(render_matrix(m) for m in stream))
        return 0
    try:
        table = census.census_by_rank(tag, n, args.method)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(counting.tables_to_json([table]))
    elif args.format == "csv":
        print(counting.tables_to_csv([table]), end="")
    else:
        for r, c in enumerate(table.counts):
            print(f"{r} {c}")
        print(f"total {table.total}")
    return 0


def cmd_roots(args: argparse.Namespace) -> int:
    try:
        m = parse_matrix(_read_text(args.matrix))
        if not m.is_square or not m.is_symmetric():
            raise ValueError("root targets must be square and symmetric")
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    profile = rank_profile(m)
    info = {"n": m.n_rows, "rank": profile.rank, "lpn": profile.is_lpn}
    if args.mode == "count":
        if profile.is_lpn:
            count = counting.lpn_root_count(m)
        else:
            print(
                "note: target is not leading-principal-nonsingular; "
                "falling back to exhaustive search",
                file=sys.stderr,
            )
            try:
                count = sum(1 for _ in census.cholesky_roots_bruteforce(m))
            except ValueError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 1
        if args.format == "json":
            print(json.dumps({**info, "count": str(count)}, indent=2))
        else:
            print(count)
        return 0
    # enumerate
    try:
        if profile.is_lpn:
            roots = list(pressing.enumerate_roots_lpn(m))
        else:
            print(
                "note: target is not leading-principal-nonsingular; "
                "falling back to exhaustive search",
                file=sys.stderr,
            )
            roots = list(census.cholesky_roots_bruteforce(m))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        payload = {**info, "count": str(len(roots)),
                   "roots": [_matrix_text_lines(u) for u in roots]}
        print(json.dumps(payload, indent=2))
    else:
        print("\n\n".join(render_matrix(u) for u in roots))
    return 0


def _load_graph(text: str) -> pressing.BicoloredGraph:
    if text.lstrip().startswith("{"):
        return pressing.graph_from_json(text)
    return pressing.BicoloredGraph.from_matrix(parse_matrix(text))


def cmd_press(args: argparse.Namespace) -> int:
    try:
        g = _load_graph(_read_text(args.graph))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.sequence is not None:
        try:
            seq = [int(t) for t in args.sequence.replace(",", " ").split()]
        except ValueError:
            print(f"error: bad sequence {args.sequence!r}", file=sys.stderr)
            return 2
        try:
            trace = pressing.run_sequence(g, seq)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        requested = seq
    else:
        trace = pressing.press_leading_sequence(g)
        requested = [s.vertex for s in trace.steps]
    if args.format == "json":
        payload = {
            "requested": list(requested),
            "steps": [
                {"vertex": s.vertex, "affected": list(s.affected)} for s in trace.steps
            ],
            "failed_at": trace.failed_at,
            "success": trace.success,
            "final": {
                "n": trace.final.n,
                "blue": list(trace.final.blue_vertices()),
                "edges": [list(e) for e in trace.final.edges()],
            },
        }
        print(json.dumps(payload, indent=2))
    else:
        for s in trace.steps:
            print(f"press {s.vertex}: affects {','.join(map(str, s.affected))}")
        if trace.failed_at is not None:
            v = requested[trace.failed_at]
            print(f"stopped at position {trace.failed_at + 1}: vertex {v} is not blue")
        blue = ",".join(map(str, trace.final.blue_vertices())) or "-"
        edges = " ".join(f"({a},{b})" for a, b in trace.final.edges()) or "-"
        print(f"final blue: {blue}")
        print(f"final edges: {edges}")
        print(f"success: {'yes' if trace.success else 'no'}")
    return 0 if trace.success else 1


def cmd_asymptotics(args: argparse.Namespace) -> int:
    digits = args.digits
    which = args.which
    if which in ("alpha", "beta", "beta-prime"):
        name = which.replace("-", "_")
        value = asymptotics.constant(name, digits)
        if args.format == "json":
            payload = {
                "constant": which,
                "value": value.decimal(digits),
                "abs_error_below": sci_string(value.abs_error, 2) if value.abs_error else "0",
            }
            print(json.dumps(payload, indent=2))
        else:
            print(f"{which} = {value.decimal(digits)}  [abs error <= 1e-{digits}]")
        return 0
    if which == "gap":
        gap = asymptotics.alpha_beta_gap(digits)
        inside = gap.strictly_inside(_BRACKET_LO, _BRACKET_HI)
        if args.format == "json":
            payload = {
                "constant": "alpha - beta-prime",
                "value": sci_string(gap.value, digits),
                "abs_error_below": sci_string(gap.abs_error, 2),
                "bracket": ["7e-07", "8e-07"],
                "inside_bracket": inside,
            }
            print(json.dumps(payload, indent=2))
        else:
            print(f"alpha - beta-prime = {sci_string(gap.value, digits)}")
            print(f"inside (7e-07, 8e-07): {'yes' if inside else 'NO'}")
        return 0 if inside else 1
    if which == "estimate":
        if args.n is None:
            print("error: --which estimate needs --n", file=sys.stderr)
            return 2
        ns = _parse_ns(args.n)
        if ns is None or len(ns) != 1:
            print("error: --which estimate needs a single --n", file=sys.stderr)
            return 2
        est = asymptotics.asymptotic_estimate(ns[0], digits)
        if args.format == "json":
            payload = {
                "n": ns[0],
                "estimate": sci_string(est.value, digits),
                "relative_error_below": f"1e-{digits}",
            }
            print(json.dumps(payload, indent=2))
        else:
            print(f"estimate({ns[0]}) = {sci_string(est.value, digits)}"
                  f"  [relative error <= 1e-{digits}]")
        return 0
    # convergence
    ns = _parse_ns(args.n) if args.n is not None else [100, 200, 400, 1000]
    if ns is None:
        print(f"error: bad --n {args.n!r}", file=sys.stderr)
        return 2
    rows = asymptotics.convergence_report(ns, digits=min(digits, 10))
    decreasing = all(a.ratio.lo > b.ratio.hi for a, b in zip(rows, rows[1:]))
    if args.format == "json":
        payload = {
            "rows": [
                {
                    "n": r.n,
                    "exact_bits": r.exact.bit_length(),
                    "ratio": r.ratio.decimal(8),
                    "abs_error_below": sci_string(r.ratio.abs_error, 2),
                }
                for r in rows
            ],
            "strictly_decreasing": decreasing,
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in rows:
            print(f"n={r.n} ratio={r.ratio.decimal(8)}")
        print(f"strictly decreasing: {'yes' if decreasing else 'NO'}")
    return 0 if decreasing else 1


def _parse_ns(raw: str) -> list[int] | None:
    try:
        ns = [int(t) for t in raw.replace(",", " ").split()]
    except ValueError:
        return None
    if not ns or any(n < 1 for n in ns):
        return None
    return ns


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        results = verify.run_suite(args.suite, args.seed)
        if args.bfile is not None:
            results.append(verify.check_bfile(args.bfile, args.offset))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "seed": args.seed,
            "results": [
                {"name": r.name, "ok": r.ok, "detail": r.detail} for r in results
            ],
            "passed": len(results) - len(failed),
            "total": len(results),
        }
        print(json.dumps(payload, indent=2))
    else:
        for r in results:
            print(f"{'ok  ' if r.ok else 'FAIL'} {r.name}: {r.detail}")
        print(f"seed: {args.seed}")
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def _add_format(p: argparse.ArgumentParser, *, csv: bool = False) -> None:
    choices = ["text", "json"] + (["csv"] if csv else [])
    p.add_argument("--format", choices=choices, default="text",
                   help="output format (default text)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="f2cholesky",
        description="Roots of the zero matrix over GF(2): enumeration, exact "
        "counts, certified asymptotics, and graph pressing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count class members, by one or all methods")
    p.add_argument("--class", dest="cls", choices=census.CLASSES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, default=None, help="count one rank stratum")
    p.add_argument(
        "--method",
        choices=["brute", "extend", "recurrence", "closed-form", "unified"],
        default=None,
        help="default: closed-form for totals, recurrence with --rank",
    )
    p.add_argument("--all-methods", action="store_true",
                   help="run every applicable method and compare")
    p.add_argument("--shards", type=int, default=None,
                   help=f"split brute scans into this many shards (default "
                        f"${ENV_SHARDS} or 1)")
    _add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("census", help="rank-stratified census, or list members")
    p.add_argument("--class", dest="cls", choices=census.CLASSES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["auto", "brute", "extend"], default="auto")
    p.add_argument("--enumerate", action="store_true",
                   help="print the members instead of counting them")
    p.add_argument("--shard-index", type=int, default=None)
    p.add_argument("--shard-count", type=int, default=None)
    _add_format(p, csv=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("roots", help="roots U (U^T U = M) of a symmetric target")
    p.add_argument("matrix", help="path to a matrix text file, or - for stdin")
    p.add_argument("--mode", choices=["count", "enumerate"], default="count")
    _add_format(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("press", help="run a pressing sequence on a bicolored graph")
    p.add_argument("graph", help="path to a graph JSON or matrix text file, or -")
    p.add_argument("--sequence", default=None,
                   help="vertices to press, e.g. '1,2,3' (default: 1..rank)")
    _add_format(p)
    p.set_defaults(func=cmd_press)

    p = sub.add_parser("asymptotics", help="certified constants and growth ratios")
    p.add_argument(
        "--which",
        choices=["alpha", "beta", "beta-prime", "gap", "estimate", "convergence"],
        required=True,
    )
    p.add_argument("--digits", type=int, default=12)
    p.add_argument("--n", default=None,
                   help="size for estimate, or comma list for convergence")
    _add_format(p)
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("verify", help="run the cross-check suite")
    p.add_argument("--suite", choices=["small", "full"], default="small")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--bfile", default=None, help="also compare a b-file of totals")
    p.add_argument("--offset", type=int, default=0,
                   help="b-file index minus our n (default 0)")
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
