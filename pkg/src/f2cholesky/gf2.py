"""Dense GF(2) matrices packed into Python ints, one int per row.

Bit j of a row int holds the entry in column j, so the LSB is column 0.
Everything here is exact integer arithmetic; dimensions are capped at 64
so a column of any matrix also fits comfortably in one int.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_DIM = 64

# The three matrix classes handled throughout the package, keyed by the
# equation an upper-triangular U must satisfy:
#   "A": U @ U == I        (involutions)
#   "B": U @ U == 0        (square roots of the zero matrix)
#   "C": U.T @ U == 0      (Cholesky-style roots of the zero matrix)
CLASSES = ("A", "B", "C")


class NotLpnError(ValueError):
    """Raised when a matrix is not in leading-principal-nonsingular form."""


def _check_dim(k: int, what: str) -> None:
    if not 0 <= k <= MAX_DIM:
        raise ValueError(f"{what} must be between 0 and {MAX_DIM}, got {k}")


@dataclass(frozen=True)
class GF2Matrix:
    """Immutable GF(2) matrix; ``rows[i]`` packs row i with bit j = column j."""

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_dim(self.n_rows, "n_rows")
        _check_dim(self.n_cols, "n_cols")
        if len(self.rows) != self.n_rows:
            raise ValueError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        mask = (1 << self.n_cols) - 1
        for i, r in enumerate(self.rows):
            if r < 0 or r & ~mask:
                raise ValueError(f"row {i} has bits outside {self.n_cols} columns")

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int | None = None) -> "GF2Matrix":
        if n_cols is None:
            n_cols = n_rows
        return cls(n_rows, n_cols, (0,) * n_rows)

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, entries: Iterable[Iterable[int]]) -> "GF2Matrix":
        rows = []
        n_cols = None
        for entry_row in entries:
            bits = list(entry_row)
            if any(b not in (0, 1) for b in bits):
                raise ValueError("entries must be 0 or 1")
            if n_cols is None:
                n_cols = len(bits)
            elif len(bits) != n_cols:
                raise ValueError("ragged rows")
            rows.append(sum(b << j for j, b in enumerate(bits)))
        if n_cols is None:
            raise ValueError("no rows given")
        return cls(len(rows), n_cols, tuple(rows))

    def bit(self, i: int, j: int) -> int:
        """Entry (i, j) as 0 or 1."""
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(f"entry ({i}, {j}) outside {self.n_rows}x{self.n_cols}")
        return self.rows[i] >> j & 1

    def column(self, j: int) -> int:
        """Column j packed into an int with bit i = row i."""
        if not 0 <= j < self.n_cols:
            raise IndexError(f"column {j} outside {self.n_cols}")
        col = 0
        for i, r in enumerate(self.rows):
            col |= (r >> j & 1) << i
        return col

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.n_cols)] for r in self.rows]

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def is_upper_triangular(self) -> bool:
        if not self.is_square:
            return False
        return all(r >> i << i == r for i, r in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(
            self.rows[i] >> j & 1 == self.rows[j] >> i & 1
            for i in range(self.n_rows)
            for j in range(i + 1, self.n_cols)
        )

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)

    @property
    def T(self) -> "GF2Matrix":
        return GF2Matrix(
            self.n_cols, self.n_rows, tuple(self.column(j) for j in range(self.n_cols))
        )

    def __add__(self, other: "GF2Matrix") -> "GF2Matrix":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ValueError("shape mismatch in addition")
        return GF2Matrix(
            self.n_rows, self.n_cols, tuple(a ^ b for a, b in zip(self.rows, other.rows))
        )

    def __matmul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.n_cols != other.n_rows:
            raise ValueError("shape mismatch in product")
        out = []
        for r in self.rows:
            acc = 0
            k = 0
            while r:
                if r & 1:
                    acc ^= other.rows[k]
                r >>= 1
                k += 1
            out.append(acc)
        return GF2Matrix(self.n_rows, other.n_cols, tuple(out))

    def mul_vec(self, x: int) -> int:
        """Matrix times column vector: x packs the vector with bit j = entry j."""
        if x < 0 or x >> self.n_cols:
            raise ValueError(f"vector has bits outside {self.n_cols} entries")
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r & x).bit_count() & 1) << i
        return out


def bits_rank(rows: Iterable[int], n_cols: int) -> int:
    """Rank of the row span; pivots chosen at the lowest set bit each time."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            low = b & -b
            if r & low:
                r ^= b
        if r:
            basis.append(r)
    return len(basis)


def _leading_minor_det(rows: tuple[int, ...], k: int) -> int:
    """det of the top-left k x k block, computed by elimination (0 or 1)."""
    mask = (1 << k) - 1
    work = [r & mask for r in rows[:k]]
    for col in range(k):
        pivot = None
        for i in range(col, k):
            if work[i] >> col & 1:
                pivot = i
                break
        if pivot is None:
            return 0
        work[col], work[pivot] = work[pivot], work[col]
        for i in range(col + 1, k):
            if work[i] >> col & 1:
                work[i] ^= work[col]
    return 1


@dataclass(frozen=True)
class RankProfile:
    """Rank plus the dets of all leading principal minors of a square matrix."""

    rank: int
    minor_dets: tuple[int, ...]

    @property
    def is_lpn(self) -> bool:
        """True when det(M_k) = 1 for exactly k = 1..rank and 0 afterwards."""
        r = self.rank
        return all(d == (1 if k < r else 0) for k, d in enumerate(self.minor_dets))


def rank_profile(m: GF2Matrix) -> RankProfile:
    if not m.is_square:
        raise ValueError("rank profile needs a square matrix")
    rank = bits_rank(m.rows, m.n_cols)
    dets = tuple(_leading_minor_det(m.rows, k) for k in range(1, m.n_rows + 1))
    return RankProfile(rank, dets)


def nullspace_basis(m: GF2Matrix) -> list[int]:
    """Basis of {x : m @ x = 0}, one int per vector, in a fixed deterministic order.

    Vectors are indexed by the free (non-pivot) columns of the reduced row
    echelon form, listed in increasing column order, so the result is the
    same on every run.
    """
    rows = list(m.rows)
    n = m.n_cols
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i] >> col & 1:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] >> col & 1:
                rows[i] ^= rows[r]
        pivots.append(col)
        r += 1
    pivot_cols = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_cols:
            continue
        v = 1 << free
        for idx, p in enumerate(pivots):
            if rows[idx] >> free & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def nullspace_vectors(m: GF2Matrix) -> Iterator[int]:
    """All 2^nullity vectors of the null space, zero first, deterministic order."""
    basis = nullspace_basis(m)
    for mask in range(1 << len(basis)):
        v = 0
        for i, b in enumerate(basis):
            if mask >> i & 1:
                v ^= b
        yield v


def col_space_contains(m: GF2Matrix, x: int) -> bool:
    """Whether x (bit i = row i) lies in the span of the columns of m."""
    if x < 0 or x >> m.n_rows:
        raise ValueError(f"vector has bits outside {m.n_rows} entries")
    cols = [m.column(j) for j in range(m.n_cols)]
    return bits_rank(cols + [x], m.n_rows) == bits_rank(cols, m.n_rows)


def class_equation_holds(tag: str, u: GF2Matrix) -> bool:
    """Check the defining equation of class ``tag`` for an upper-triangular u."""
    if tag not in CLASSES:
        raise ValueError(f"unknown class {tag!r}, expected one of {CLASSES}")
    if not u.is_upper_triangular():
        return False
    if tag == "A":
        return u @ u == GF2Matrix.identity(u.n_rows)
    if tag == "B":
        return (u @ u).is_zero()
    return (u.T @ u).is_zero()


def render_matrix(m: GF2Matrix) -> str:
    """One line per row, entries 0/1 separated by single spaces."""
    return "\n".join(" ".join(str(r >> j & 1) for j in range(m.n_cols)) for r in m.rows)


def parse_matrix(text: str) -> GF2Matrix:
    """Inverse of render_matrix; rejects ragged rows and non-binary entries."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    rows = []
    n_cols = None
    for lineno, line in enumerate(lines, start=1):
        tokens = line.split()
        if not tokens:
            raise ValueError(f"line {lineno}: blank row in matrix text")
        bits = []
        for t in tokens:
            if t not in ("0", "1"):
                raise ValueError(f"line {lineno}: bad entry {t!r}")
            bits.append(int(t))
        if n_cols is None:
            n_cols = len(bits)
        elif len(bits) != n_cols:
            raise ValueError(f"line {lineno}: ragged row ({len(bits)} vs {n_cols} entries)")
        rows.append(sum(b << j for j, b in enumerate(bits)))
    if n_cols is None:
        raise ValueError("empty matrix text")
    return GF2Matrix(len(rows), n_cols, tuple(rows))
