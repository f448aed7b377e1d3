"""Exhaustive enumeration of the matrix classes, extension streams, and censuses.

Streams are deterministic: matrices appear in row-major lexicographic order
on the strictly upper entries (the diagonal is forced by the class).  The
free entries are read as a big binary counter with entry (0, 1) as the most
significant bit, which makes sharding a plain split of the counter range:
contiguous shards concatenate back into the full stream, and per-shard
counts add up to the total no matter how many shards are used.
"""

from __future__ import annotations

from typing import Iterator

from .counting import RankTable
from .gf2 import (
    MAX_DIM,
    CLASSES,
    GF2Matrix,
    bits_rank,
    class_equation_holds,
    nullspace_vectors,
)

# Hard caps on exhaustive scans: the free space has n(n-1)/2 bits, so these
# keep the candidate count at or below 2^21.  Class A additionally verifies
# a product per candidate with no pruning, hence the lower cap.
BRUTE_CAPS = {"A": 6, "B": 7, "C": 7}

# Extension censuses walk the full member tree, so they are bounded by the
# class totals, not by 2^(free bits); past this the counts are astronomical.
EXTEND_CAP = 12


def shard_range(total: int, shard_index: int, shard_count: int) -> tuple[int, int]:
    """Contiguous [lo, hi) slice of range(total) for one shard of shard_count."""
    if shard_count < 1:
        raise ValueError("shard_count must be at least 1")
    if not 0 <= shard_index < shard_count:
        raise ValueError(f"shard_index {shard_index} outside 0..{shard_count - 1}")
    return total * shard_index // shard_count, total * (shard_index + 1) // shard_count


def _chunk_tables(n: int) -> list[list[int]]:
    """Per row, the map from counter chunk to strictly-upper row bits.

    Chunk bit order puts the leftmost free column (i+1) most significant,
    so ascending chunks give ascending rows in entry-lexicographic order.
    """
    tables = []
    for i in range(n):
        w = n - 1 - i
        tab = []
        for chunk in range(1 << w):
            row = 0
            for b in range(w):
                if chunk >> (w - 1 - b) & 1:
                    row |= 1 << (i + 1 + b)
            tab.append(row)
        tables.append(tab)
    return tables


def _scan_flat(n: int, diag_one: bool, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Flat scan over all strictly-upper patterns in counter range [lo, hi).

    Yields the row tuples whose matrix squares to the forced target: the
    identity when the diagonal is all ones (class A), zero when it is all
    zeros (class B).  No pruning: every counter in range is a candidate.
    """
    tables = _chunk_tables(n)
    widths = [n - 1 - i for i in range(n)]
    suffix = [0] * (n + 1)
    for i in reversed(range(n)):
        suffix[i] = suffix[i + 1] + widths[i]
    diag = [1 << i if diag_one else 0 for i in range(n)]
    rows = [0] * n

    def rec(t: int, pre: int) -> Iterator[tuple[int, ...]]:
        if t == n:
            if not lo <= pre < hi:
                return
            for k in range(n):
                m = rows[k]
                acc = 0
                while m:
                    low = m & -m
                    acc ^= rows[low.bit_length() - 1]
                    m ^= low
                if acc != diag[k]:  # target row k is e_k for class A, 0 for B
                    return
            yield tuple(rows)
            return
        rem = suffix[t + 1]
        base = pre << widths[t]
        for chunk, free in enumerate(tables[t]):
            c = base + chunk
            if (c + 1) << rem <= lo or c << rem >= hi:
                continue
            rows[t] = free | diag[t]
            yield from rec(t + 1, c)

    yield from rec(0, 0)


def _scan_c(n: int, target: tuple[int, ...] | None, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Row-by-row search for upper-triangular U with U.T @ U equal to a
    symmetric target (None means the zero matrix), pruned after each row.

    Placing row t completes every column dot product involving column t,
    because column t has no entries below row t.  The accumulated product
    acc = xor of rows k <= t with entry (k, t) set holds those dots in its
    bits >= t, so each prefix is checked once and dead branches die early.
    The diagonal entry is forced by the (t, t) target.
    """
    tables = _chunk_tables(n)
    widths = [n - 1 - i for i in range(n)]
    suffix = [0] * (n + 1)
    for i in reversed(range(n)):
        suffix[i] = suffix[i + 1] + widths[i]
    tgt = target if target is not None else (0,) * n
    rows = [0] * n

    def rec(t: int, pre: int) -> Iterator[tuple[int, ...]]:
        if t == n:
            if lo <= pre < hi:
                yield tuple(rows)
            return
        rem = suffix[t + 1]
        base = pre << widths[t]
        col_parity = 0
        for k in range(t):
            col_parity ^= rows[k] >> t & 1
        dbit = (col_parity ^ (tgt[t] >> t & 1)) << t
        for chunk, free in enumerate(tables[t]):
            c = base + chunk
            if (c + 1) << rem <= lo or c << rem >= hi:
                continue
            row = free | dbit
            rows[t] = row
            acc = 0
            for k in range(t + 1):
                if rows[k] >> t & 1:
                    acc ^= rows[k]
            if (acc ^ tgt[t]) >> t == 0:
                yield from rec(t + 1, c)
        rows[t] = 0

    yield from rec(0, 0)


def _check_size(tag: str, n: int) -> None:
    if tag not in CLASSES:
        raise ValueError(f"unknown class {tag!r}, expected one of {CLASSES}")
    if n < 1:
        raise ValueError("n must be at least 1")
    cap = BRUTE_CAPS[tag]
    if n > cap:
        raise ValueError(
            f"exhaustive scan of class {tag} is capped at n = {cap}; "
            "use counting.recurrence_table or counting.closed_form_count for counts, "
            "or census_by_rank(method='extend') for rank censuses"
        )


def enumerate_class(
    tag: str, n: int, *, shard_index: int = 0, shard_count: int = 1
) -> Iterator[GF2Matrix]:
    """All n x n members of a class, row-major lexicographic on free entries.

    With shard arguments, yields the shard's contiguous slice of that same
    stream; concatenating shards 0..shard_count-1 reproduces the full stream.
    """
    _check_size(tag, n)
    lo, hi = shard_range(1 << (n * (n - 1) // 2), shard_index, shard_count)
    if tag == "C":
        stream = _scan_c(n, None, lo, hi)
    else:
        stream = _scan_flat(n, tag == "A", lo, hi)
    for rows in stream:
        yield GF2Matrix(n, n, rows)


def count_class(tag: str, n: int, *, shard_index: int = 0, shard_count: int = 1) -> int:
    """Member count by exhaustive scan, without materializing matrices."""
    _check_size(tag, n)
    lo, hi = shard_range(1 << (n * (n - 1) // 2), shard_index, shard_count)
    if tag == "C":
        stream = _scan_c(n, None, lo, hi)
    else:
        stream = _scan_flat(n, tag == "A", lo, hi)
    return sum(1 for _ in stream)


def _require_member(m: GF2Matrix, tag: str) -> None:
    if not m.is_square:
        raise ValueError(f"class {tag} extension needs a square matrix")
    if not class_equation_holds(tag, m):
        raise ValueError(f"matrix is not a class {tag} member")


def extend_class_B(b_prime: GF2Matrix) -> Iterator[GF2Matrix]:
    """All class-B matrices whose leading principal block is b_prime.

    Bordering with a last column v and a zero last row stays in the class
    exactly when v is in the null space of b_prime, so the stream has
    2^nullity members and every size-(n+1) member arises from exactly one
    parent.  Order follows nullspace_vectors, the zero vector first.
    """
    _require_member(b_prime, "B")
    n1 = b_prime.n_rows + 1
    if n1 > MAX_DIM:
        raise ValueError(f"extension would exceed the dimension cap {MAX_DIM}")
    for v in nullspace_vectors(b_prime):
        rows = tuple(
            r | ((v >> i & 1) << (n1 - 1)) for i, r in enumerate(b_prime.rows)
        ) + (0,)
        yield GF2Matrix(n1, n1, rows)


def extend_class_C(c_prime: GF2Matrix) -> Iterator[GF2Matrix]:
    """All class-C matrices whose leading principal block is c_prime.

    The new column w must be orthogonal to every old column, i.e. lie in
    the null space of c_prime transposed, and the new diagonal entry is
    forced to the parity of w so the new column is self-orthogonal.
    """
    _require_member(c_prime, "C")
    n1 = c_prime.n_rows + 1
    if n1 > MAX_DIM:
        raise ValueError(f"extension would exceed the dimension cap {MAX_DIM}")
    for w in nullspace_vectors(c_prime.T):
        c = w.bit_count() & 1
        rows = tuple(
            r | ((w >> i & 1) << (n1 - 1)) for i, r in enumerate(c_prime.rows)
        ) + (c << (n1 - 1),)
        yield GF2Matrix(n1, n1, rows)


def census_by_rank(tag: str, n: int, method: str = "auto") -> RankTable:
    """Rank-stratified census from actual matrices (no counting formulas).

    method "brute" scans all candidates (small n), "extend" walks the member
    tree by repeated bordering (classes B and C), "auto" picks whichever
    applies.  Both compute the rank of each member directly, so either one
    is an independent oracle for the counting module.
    """
    if tag not in CLASSES:
        raise ValueError(f"unknown class {tag!r}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if method == "auto":
        if n <= BRUTE_CAPS[tag]:
            method = "brute"
        elif tag in ("B", "C") and n <= EXTEND_CAP:
            method = "extend"
        else:
            raise ValueError(
                f"no census method reaches class {tag} at n = {n}; "
                "counting.recurrence_table gives exact rank counts at any size"
            )
    if method == "brute":
        _check_size(tag, n)
        counts = [0] * (n + 1)
        for m in enumerate_class(tag, n):
            counts[bits_rank(m.rows, n)] += 1
        return RankTable(tag, n, tuple(counts))
    if method == "extend":
        if tag not in ("B", "C"):
            raise ValueError("extension streams exist for classes B and C only")
        if n > EXTEND_CAP:
            raise ValueError(f"extension census is capped at n = {EXTEND_CAP}")
        extend = extend_class_B if tag == "B" else extend_class_C
        counts = [0] * (n + 1)

        def rec(m: GF2Matrix) -> None:
            if m.n_rows == n:
                counts[bits_rank(m.rows, n)] += 1
                return
            for child in extend(m):
                rec(child)

        rec(GF2Matrix.zeros(0))
        return RankTable(tag, n, tuple(counts))
    raise ValueError(f"unknown census method {method!r}")


def cholesky_roots_bruteforce(
    m: GF2Matrix, *, cap: int = BRUTE_CAPS["C"]
) -> Iterator[GF2Matrix]:
    """All upper-triangular U with U.T @ U = m, by the pruned row search.

    The target must be symmetric (otherwise no roots exist and the input is
    almost surely a mistake, so it is rejected).  Works for any symmetric
    target, LPN or not; yields in the same lexicographic order as
    enumerate_class("C", n), which is the special case m = 0.
    """
    if not m.is_square:
        raise ValueError("root search needs a square matrix")
    if not m.is_symmetric():
        raise ValueError("root search needs a symmetric target")
    n = m.n_rows
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > cap:
        raise ValueError(
            f"exhaustive root search is capped at n = {cap}; "
            "for LPN targets counting.lpn_root_count and "
            "pressing.enumerate_roots_lpn cover larger sizes"
        )
    for rows in _scan_c(n, m.rows, 0, 1 << (n * (n - 1) // 2)):
        yield GF2Matrix(n, n, rows)
