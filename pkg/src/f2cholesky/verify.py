"""Self-checks wiring the independent routes against each other.

Each check compares two or more ways of computing the same thing: scans
against formulas, extension trees against recurrences, press runs against
minor profiles.  The small suite finishes in seconds; the full suite adds
the larger exhaustive scans and stays within about a minute.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import asymptotics, census, counting, pressing
from .bounded import pow2_quarters
from .gf2 import GF2Matrix, NotLpnError, rank_profile

DEFAULT_SEED = 20260817

# 5x5 regression target: rank 3, LPN, exactly two roots differing in the
# trailing 2x2 corner.
EXAMPLE_TARGET = GF2Matrix.from_lists(
    [
        [1, 1, 1, 0, 0],
        [1, 0, 0, 1, 0],
        [1, 0, 1, 0, 1],
        [0, 1, 0, 0, 1],
        [0, 0, 1, 1, 1],
    ]
)
EXAMPLE_ROOTS = (
    GF2Matrix.from_lists(
        [
            [1, 1, 1, 0, 0],
            [0, 1, 1, 1, 0],
            [0, 0, 1, 1, 1],
            [0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0],
        ]
    ),
    GF2Matrix.from_lists(
        [
            [1, 1, 1, 0, 0],
            [0, 1, 1, 1, 0],
            [0, 0, 1, 1, 1],
            [0, 0, 0, 0, 1],
            [0, 0, 0, 0, 1],
        ]
    ),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _result(name: str, ok: bool, detail: str) -> CheckResult:
    return CheckResult(name, bool(ok), detail)


def check_totals(n_max: int) -> CheckResult:
    """Scan, extension census, recurrence, and both closed forms agree."""
    bad = []
    for n in range(1, n_max + 1):
        values = {
            "recurrence": counting.recurrence_table("B", n).total,
            "closed": counting.closed_form_count(n),
            "unified": counting.unified_count(n),
        }
        for tag in census.CLASSES:
            if n <= census.BRUTE_CAPS[tag]:
                values[f"scan-{tag}"] = census.count_class(tag, n)
        if n <= census.EXTEND_CAP:
            values["extend-B"] = census.census_by_rank("B", n, "extend").total
            values["extend-C"] = census.census_by_rank("C", n, "extend").total
        if len(set(values.values())) != 1:
            bad.append((n, values))
    detail = f"n = 1..{n_max} all routes agree" if not bad else f"mismatch: {bad[0]}"
    return _result("totals", not bad, detail)


def check_rank_tables(n_max: int) -> CheckResult:
    """Brute and extension censuses reproduce the recurrence, rank by rank."""
    for n in range(1, n_max + 1):
        want = counting.recurrence_table("B", n).counts
        for tag in ("B", "C"):
            if census.census_by_rank(tag, n, "brute").counts != want:
                return _result("rank-tables", False, f"brute census differs at n={n}")
            if census.census_by_rank(tag, n, "extend").counts != want:
                return _result("rank-tables", False, f"extension census differs at n={n}")
    return _result("rank-tables", True, f"B and C match the recurrence for n = 1..{n_max}")


def check_class_a(n_max: int) -> CheckResult:
    """Class A members are exactly class B shifted by the identity."""
    for n in range(1, n_max + 1):
        ident = GF2Matrix.identity(n)
        image = [m + ident for m in census.enumerate_class("A", n)]
        b_members = list(census.enumerate_class("B", n))
        if sorted(x.rows for x in image) != sorted(x.rows for x in b_members):
            return _result("class-a-shift", False, f"shift bijection breaks at n={n}")
        table = census.census_by_rank("A", n, "brute")
        if table.counts[n] != table.total:
            return _result("class-a-shift", False, f"singular class A member at n={n}")
    return _result("class-a-shift", True, f"bijection with class B holds for n = 1..{n_max}")


def check_shards(n: int, shard_counts: tuple[int, ...] = (2, 3, 7)) -> CheckResult:
    """Sharded streams concatenate to the full stream; counts add up."""
    for tag in census.CLASSES:
        size = min(n, census.BRUTE_CAPS[tag])
        full = [m.rows for m in census.enumerate_class(tag, size)]
        for s in shard_counts:
            merged = [
                m.rows
                for i in range(s)
                for m in census.enumerate_class(tag, size, shard_index=i, shard_count=s)
            ]
            if merged != full:
                return _result("shards", False, f"class {tag} stream differs at {s} shards")
            total = sum(
                census.count_class(tag, size, shard_index=i, shard_count=s)
                for i in range(s)
            )
            if total != len(full):
                return _result("shards", False, f"class {tag} counts differ at {s} shards")
    return _result("shards", True, f"streams and counts are shard-invariant at n <= {n}")


def _random_lpn(rng: random.Random, n: int, r: int) -> GF2Matrix:
    """Random symmetric LPN matrix of size n and rank exactly r.

    Built as U.T @ U for U with unit diagonal on its first r rows and random
    entries to their right: every leading minor of the product up to r is a
    square of a triangular determinant, hence 1.
    """
    rows = []
    for k in range(r):
        free = rng.getrandbits(n - k - 1) << (k + 1) if k + 1 < n else 0
        rows.append(1 << k | free)
    rows.extend([0] * (n - r))
    u = GF2Matrix(n, n, tuple(rows))
    return u.T @ u


def check_lpn_roots(samples: int, n_max: int, seed: int) -> CheckResult:
    """Exhaustive root search matches the formula and the structured stream."""
    rng = random.Random(seed)
    tried = 0
    while tried < samples:
        n = rng.randint(1, n_max)
        r = rng.randint(0, n)
        m = _random_lpn(rng, n, r)
        profile = rank_profile(m)
        if profile.rank != r or not profile.is_lpn:
            return _result("lpn-roots", False, f"sampler broke LPN at n={n} r={r}")
        brute = [u.rows for u in census.cholesky_roots_bruteforce(m)]
        structured = [u.rows for u in pressing.enumerate_roots_lpn(m)]
        if brute != structured:
            return _result("lpn-roots", False, f"root streams differ for {m.rows}")
        if len(brute) != counting.lpn_root_count(m):
            return _result("lpn-roots", False, f"root count differs for {m.rows}")
        tried += 1
    return _result("lpn-roots", True, f"{samples} random LPN targets up to n = {n_max}")


def check_diagonal_targets(n_max: int) -> CheckResult:
    """Diagonal targets: ones-prefix diagonals are LPN and follow the count
    formula; any other diagonal must be rejected by the LPN routes."""
    for n in range(1, n_max + 1):
        for bits in range(1 << n):
            m = GF2Matrix(n, n, tuple((bits >> i & 1) << i for i in range(n)))
            r = bits.bit_count()
            is_prefix = bits == (1 << r) - 1
            if is_prefix:
                want = counting.unified_count(n - r)
                if counting.lpn_root_count(m) != want:
                    return _result("diagonal-targets", False, f"formula differs at {m.rows}")
                got = sum(1 for _ in census.cholesky_roots_bruteforce(m))
                if got != want:
                    return _result(
                        "diagonal-targets", False, f"brute count {got} != {want} at {m.rows}"
                    )
            else:
                try:
                    counting.lpn_root_count(m)
                    return _result("diagonal-targets", False, f"accepted non-LPN {m.rows}")
                except NotLpnError:
                    pass
    return _result("diagonal-targets", True, f"all diagonals checked for n = 1..{n_max}")


def check_pressing_equivalence(n: int) -> CheckResult:
    """Over every n-vertex bicolored graph: pressing 1..rank succeeds exactly
    when the matrix is LPN, and then both root routes agree."""
    count_lpn = 0
    for bits in range(1 << (n * (n + 1) // 2)):
        rows = [0] * n
        k = 0
        for i in range(n):
            for j in range(i, n):
                if bits >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k += 1
        m = GF2Matrix(n, n, tuple(rows))
        g = pressing.BicoloredGraph.from_matrix(m)
        trace = pressing.press_leading_sequence(g)
        profile = rank_profile(m)
        if trace.success != profile.is_lpn:
            return _result("pressing-lpn", False, f"equivalence fails for {m.rows}")
        if profile.is_lpn:
            count_lpn += 1
            pressing.instructional_root(m)  # raises if the two routes disagree
    return _result(
        "pressing-lpn", True, f"all {1 << (n * (n + 1) // 2)} graphs on {n} vertices; "
        f"{count_lpn} pressable"
    )


def check_example() -> CheckResult:
    """The 5x5 regression target has exactly its two known roots, and the
    press trace reads off the first one."""
    m = EXAMPLE_TARGET
    roots = list(census.cholesky_roots_bruteforce(m))
    if [r.rows for r in roots] != [r.rows for r in EXAMPLE_ROOTS]:
        return _result("example-roots", False, "exhaustive root set changed")
    if counting.lpn_root_count(m) != 2:
        return _result("example-roots", False, "count formula changed")
    if pressing.instructional_root(m) != EXAMPLE_ROOTS[0]:
        return _result("example-roots", False, "instructional root changed")
    structured = list(pressing.enumerate_roots_lpn(m))
    if [r.rows for r in structured] != [r.rows for r in EXAMPLE_ROOTS]:
        return _result("example-roots", False, "structured root stream changed")
    return _result("example-roots", True, "5x5 target has exactly the two known roots")


def check_constants() -> CheckResult:
    """Digit anchors and the exact quarter-power tie between the constants."""
    alpha = asymptotics.constant("alpha", 13)
    if not (abs(alpha.value - Fraction("0.28332924469")) <= Fraction(1, 10**11)):
        return _result("constants", False, f"alpha digits moved: {alpha.decimal(12)}")
    beta = asymptotics.constant("beta", 11)
    if not (abs(beta.value - Fraction("0.336936271")) <= Fraction(1, 10**9)):
        return _result("constants", False, f"beta digits moved: {beta.decimal(10)}")
    bp = asymptotics.constant("beta_prime", 32)
    beta_hi = asymptotics.constant("beta", 32)
    diff = bp - beta_hi * pow2_quarters(-1, 140)
    if not abs(diff.value) <= diff.abs_error + Fraction(1, 10**30):
        return _result("constants", False, "beta_prime != beta / 2**0.25")
    gap = asymptotics.alpha_beta_gap(12)
    if not gap.strictly_inside(Fraction(7, 10**7), Fraction(8, 10**7)):
        return _result("constants", False, f"gap left its bracket: {gap.decimal(10)}")
    return _result("constants", True, "digit anchors, quarter-power tie, and gap bracket hold")


def check_convergence(ns: tuple[int, ...]) -> CheckResult:
    """Exact/estimate ratios decrease strictly and stay above 1 along ns;
    once n reaches 1000 the ratio must also certify below 1.05."""
    rows = asymptotics.convergence_report(ns, digits=10)
    for a, b in zip(rows, rows[1:]):
        if not a.ratio.lo > b.ratio.hi:
            return _result("convergence", False, f"ratio not decreasing at n={b.n}")
    last = rows[-1].ratio
    if not last.lo > 1:
        return _result("convergence", False, f"final ratio {last.decimal(6)} reached 1")
    if rows[-1].n >= 1000 and not last.hi < Fraction(105, 100):
        return _result("convergence", False, f"final ratio {last.decimal(6)} above 1.05")
    detail = ", ".join(f"n={r.n}: {r.ratio.decimal(5)}" for r in rows)
    return _result("convergence", True, detail)


def check_bfile(path: str, offset: int = 0) -> CheckResult:
    """Compare a b-file of totals (lines "index value") with the closed form."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise ValueError(f"cannot read b-file: {exc}") from exc
    checked = 0
    for lineno, line in enumerate(lines, start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        parts = body.split()
        if len(parts) != 2:
            raise ValueError(f"b-file line {lineno}: expected 'index value'")
        try:
            idx, val = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"b-file line {lineno}: non-integer field") from exc
        n = idx - offset
        if n < 1:
            raise ValueError(f"b-file line {lineno}: index maps to n = {n} < 1")
        want = counting.closed_form_count(n)
        if val != want:
            return _result(
                "bfile", False, f"line {lineno}: value {val} != {want} at n = {n}"
            )
        checked += 1
    if checked == 0:
        raise ValueError("b-file has no data lines")
    return _result("bfile", True, f"{checked} entries match the closed form")


def run_suite(suite: str = "small", seed: int = DEFAULT_SEED) -> list[CheckResult]:
    if suite not in ("small", "full"):
        raise ValueError(f"unknown suite {suite!r}, expected 'small' or 'full'")
    full = suite == "full"
    checks: list[Callable[[], CheckResult]] = [
        lambda: check_totals(8 if full else 6),
        lambda: check_rank_tables(6 if full else 5),
        lambda: check_class_a(6 if full else 4),
        lambda: check_shards(6 if full else 5),
        lambda: check_lpn_roots(100 if full else 25, 6, seed),
        lambda: check_diagonal_targets(6 if full else 5),
        lambda: check_pressing_equivalence(4 if full else 3),
        check_example,
        check_constants,
        lambda: check_convergence((100, 200, 400, 1000) if full else (50, 100, 200)),
    ]
    return [c() for c in checks]
