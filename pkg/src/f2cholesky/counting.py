"""Exact counts of the matrix classes: recurrence, closed forms, root counts.

Everything returns Python ints, which stay exact at any size; the counts
grow like 2**(n^2/4) so they get big fast.  The rank-stratified recurrence,
the closed-form sums, and the unified floor/ceiling formula are independent
routes to the same numbers and are cross-checked in the test suite.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator

from .bounded import BoundedReal
from .gf2 import CLASSES, GF2Matrix, NotLpnError, rank_profile


@dataclass(frozen=True)
class RankTable:
    """Counts of n x n class members holding each rank r = 0..n."""

    tag: str
    n: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.tag not in CLASSES:
            raise ValueError(f"unknown class {self.tag!r}")
        if len(self.counts) != self.n + 1:
            raise ValueError("need one count per rank 0..n")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def as_dict(self) -> dict[int, int]:
        return {r: c for r, c in enumerate(self.counts)}


def recurrence_tables(tag: str, n_max: int) -> Iterator[RankTable]:
    """Yield the rank tables for n = 1..n_max by the bordering recurrence.

    count(n, r) = count(n-1, r) * 2^r + count(n-1, r-1) * (2^(n-r) - 2^(r-1)):
    appending a column inside the column space keeps the rank (2^r choices),
    while a column outside it raises the rank by one.  Classes B and C have
    identical tables; class A is concentrated at full rank with the same total.
    """
    if tag not in ("B", "C"):
        raise ValueError(f"recurrence applies to classes B and C, got {tag!r}")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    counts = [1, 0]  # n = 1: the zero matrix, rank 0
    yield RankTable(tag, 1, tuple(counts))
    for n in range(2, n_max + 1):
        prev = counts
        counts = [0] * (n + 1)
        counts[0] = 1
        for r in range(1, n + 1):
            grow = prev[r] << r if r < n else 0
            bump = (prev[r - 1] << (n - r)) - (prev[r - 1] << (r - 1)) if prev[r - 1] else 0
            counts[r] = grow + bump
        yield RankTable(tag, n, tuple(counts))


def recurrence_table(tag: str, n: int) -> RankTable:
    for table in recurrence_tables(tag, n):
        pass
    return table


def _comb0(n: int, k: int) -> int:
    """Binomial coefficient that is 0 outside 0 <= k <= n."""
    return comb(n, k) if 0 <= k <= n else 0


def closed_form_count(n: int) -> int:
    """Total class-B (equally class-C) count as an alternating binomial sum."""
    if n < 1:
        raise ValueError("n must be at least 1")
    half, odd = divmod(n, 2)
    total = 0
    for j in range(-(half // 3) - 1, half // 3 + 2):
        coef = _comb0(n, half - 3 * j) - _comb0(n, half - 3 * j - 1)
        if coef == 0:
            continue
        if odd:
            e = half * half + half - 3 * j * j - 2 * j
        else:
            e = half * half - 3 * j * j - j
        if e < 0:
            raise ArithmeticError(f"negative exponent at n={n}, j={j}")
        total += coef << e
    return total


def unified_count(n: int) -> int:
    """Same total via one floor/ceiling sum for both parities; n >= 0.

    The exponent floor(n/2) * ceil(n/2) - 3j^2 - (ceil(n/2) - floor(n/2) + 1)j
    specializes to the even and odd closed forms, and is nonnegative whenever
    the binomial factor is nonzero (guarded below just in case)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1  # the empty matrix
    fl, ce = n // 2, (n + 1) // 2
    total = 0
    for j in range(-(n // 6) - 2, n // 6 + 2):
        coef = _comb0(n, fl - 3 * j) - _comb0(n, fl - 3 * j - 1)
        if coef == 0:
            continue
        e = fl * ce - 3 * j * j - (ce - fl + 1) * j
        if e < 0:
            raise ArithmeticError(f"negative exponent at n={n}, j={j}")
        total += coef << e
    return total


def class_total(tag: str, n: int) -> int:
    """Total members of a class at size n; A, B, C all share the same total."""
    if tag not in CLASSES:
        raise ValueError(f"unknown class {tag!r}")
    return closed_form_count(n)


def rank_table(tag: str, n: int) -> RankTable:
    """Formula-side rank table for any class: the recurrence for B and C;
    class A sits entirely at full rank (its members are invertible)."""
    if tag in ("B", "C"):
        return recurrence_table(tag, n)
    if tag == "A":
        if n < 1:
            raise ValueError("n must be at least 1")
        return RankTable("A", n, (0,) * n + (closed_form_count(n),))
    raise ValueError(f"unknown class {tag!r}")


def lpn_root_count(m: GF2Matrix) -> int:
    """Number of upper-triangular U with U.T @ U = m, for m in LPN form.

    Requires m symmetric and leading-principal-nonsingular.  The roots are
    a fixed r x n top block stacked over an arbitrary class-C member of
    size n - r, so the count is the class total at n - rank(m).
    """
    if not m.is_square:
        raise ValueError("root counting needs a square matrix")
    if not m.is_symmetric():
        raise ValueError("root counting needs a symmetric matrix")
    profile = rank_profile(m)
    if not profile.is_lpn:
        raise NotLpnError("matrix is not leading-principal-nonsingular")
    return unified_count(m.n_rows - profile.rank)


def normalized_density(n: int, digits: int = 12) -> BoundedReal:
    """Exact ratio count(n) / 2**(n(n-1)/2): the chance a random strictly
    upper-triangular matrix squares to zero."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return BoundedReal.exact(Fraction(closed_form_count(n), 1 << (n * (n - 1) // 2)))


def tables_to_json(tables: list[RankTable]) -> str:
    """Counts serialized as decimal strings so arbitrary precision survives JSON."""
    payload = [
        {
            "class": t.tag,
            "n": t.n,
            "counts": {str(r): str(c) for r, c in enumerate(t.counts)},
            "total": str(t.total),
        }
        for t in tables
    ]
    return json.dumps(payload, indent=2)


def tables_to_csv(tables: list[RankTable]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["class", "n", "r", "count"])
    for t in tables:
        for r, c in enumerate(t.counts):
            writer.writerow([t.tag, t.n, r, c])
    return buf.getvalue()


def totals_to_bfile(n_max: int, offset: int = 0, comment: str | None = None) -> str:
    """OEIS-style b-file: one "index value" pair per line, optional # header."""
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    for n in range(1, n_max + 1):
        lines.append(f"{n + offset} {closed_form_count(n)}")
    return "\n".join(lines) + "\n"
