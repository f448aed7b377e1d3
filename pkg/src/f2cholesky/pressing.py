"""Bicolored graph pressing and its matrix side.

A bicolored graph is a simple graph whose vertices are blue or white.  Its
matrix is the adjacency matrix with the blue pattern on the diagonal.
Pressing a blue vertex v complements the edges inside the closed
neighborhood N[v], flips the colors there, and leaves v white and isolated;
on the matrix side this is exactly adding the rank-one product of column v
with itself.  Pressing vertices 1..r in order (r = rank) succeeds precisely
when the matrix has nonsingular leading principal minors up to its rank,
and the pressed neighborhoods then read off the canonical root's rows.

Vertices are 1-based in the public API, matching the JSON graph format.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Sequence

from .census import enumerate_class
from .gf2 import MAX_DIM, GF2Matrix, NotLpnError, bits_rank, rank_profile


def _bit_list(mask: int) -> tuple[int, ...]:
    """Set bits as sorted 1-based vertex labels."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _mask_from_vertices(vertices: Sequence[int], n: int, what: str) -> int:
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or not 1 <= v <= n:
            raise ValueError(f"{what} {v!r} outside 1..{n}")
        mask |= 1 << (v - 1)
    return mask


@dataclass(frozen=True)
class BicoloredGraph:
    """n vertices 1..n; adj[i] packs the neighbors of vertex i+1; bit i of
    colors marks vertex i+1 blue."""

    n: int
    adj: tuple[int, ...]
    colors: int

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_DIM:
            raise ValueError(f"vertex count must be between 0 and {MAX_DIM}")
        if len(self.adj) != self.n:
            raise ValueError("need one adjacency row per vertex")
        mask = (1 << self.n) - 1
        if self.colors < 0 or self.colors & ~mask:
            raise ValueError("colors has bits outside the vertex range")
        for i, row in enumerate(self.adj):
            if row < 0 or row & ~mask:
                raise ValueError(f"adjacency row {i} has bits outside the vertex range")
            if row >> i & 1:
                raise ValueError(f"vertex {i + 1} has a self-loop")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.adj[i] >> j & 1 != self.adj[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i + 1}, {j + 1})")

    @classmethod
    def empty(cls, n: int, blue: Sequence[int] = ()) -> "BicoloredGraph":
        return cls(n, (0,) * n, _mask_from_vertices(blue, n, "blue vertex"))

    @classmethod
    def from_edges(
        cls, n: int, blue: Sequence[int], edges: Sequence[Sequence[int]]
    ) -> "BicoloredGraph":
        adj = [0] * n
        seen = set()
        for e in edges:
            if len(e) != 2:
                raise ValueError(f"edge {e!r} is not a pair")
            a, b = e
            _mask_from_vertices((a, b), n, "edge endpoint")
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            adj[a - 1] |= 1 << (b - 1)
            adj[b - 1] |= 1 << (a - 1)
        return cls(n, tuple(adj), _mask_from_vertices(blue, n, "blue vertex"))

    @classmethod
    def from_matrix(cls, m: GF2Matrix) -> "BicoloredGraph":
        if not m.is_square or not m.is_symmetric():
            raise ValueError("a graph needs a square symmetric matrix")
        colors = 0
        adj = []
        for i, row in enumerate(m.rows):
            colors |= (row >> i & 1) << i
            adj.append(row & ~(1 << i))
        return cls(m.n_rows, tuple(adj), colors)

    def blue_vertices(self) -> tuple[int, ...]:
        return _bit_list(self.colors)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if self.adj[i] >> j & 1:
                    out.append((i + 1, j + 1))
        return out

    def is_blue(self, v: int) -> bool:
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} outside 1..{self.n}")
        return bool(self.colors >> (v - 1) & 1)

    @property
    def is_discrete(self) -> bool:
        """All white and edgeless: the terminal state of successful pressing."""
        return self.colors == 0 and all(r == 0 for r in self.adj)


def matrix_of(g: BicoloredGraph) -> GF2Matrix:
    rows = tuple(r | (g.colors >> i & 1) << i for i, r in enumerate(g.adj))
    return GF2Matrix(g.n, g.n, rows)


def press(g: BicoloredGraph, v: int) -> BicoloredGraph:
    """Press blue vertex v: complement edges and flip colors inside N[v]."""
    if not g.is_blue(v):
        raise ValueError(f"vertex {v} is not blue, so it cannot be pressed")
    i = v - 1
    closed = g.adj[i] | 1 << i
    adj = list(g.adj)
    m = closed
    while m:
        low = m & -m
        k = low.bit_length() - 1
        adj[k] ^= closed & ~low
        m ^= low
    return BicoloredGraph(g.n, tuple(adj), g.colors ^ closed)


def affected_set(g: BicoloredGraph, v: int) -> tuple[int, ...]:
    """Closed neighborhood of v, the vertices a press of v would touch."""
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} outside 1..{g.n}")
    return _bit_list(g.adj[v - 1] | 1 << (v - 1))


@dataclass(frozen=True)
class PressStep:
    vertex: int
    affected: tuple[int, ...]


@dataclass(frozen=True)
class PressTrace:
    start: BicoloredGraph
    steps: tuple[PressStep, ...]
    final: BicoloredGraph
    failed_at: int | None

    @property
    def success(self) -> bool:
        """Every requested press applied, ending all white and edgeless."""
        return self.failed_at is None and self.final.is_discrete


def run_sequence(g: BicoloredGraph, vertices: Sequence[int]) -> PressTrace:
    """Press the vertices in order, recording each affected set.

    A press of a non-blue vertex stops the run there (failed_at holds its
    index in the request); a run that applies every press but leaves color
    or edges behind has failed_at None yet success False.
    """
    steps = []
    cur = g
    for idx, v in enumerate(vertices):
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} outside 1..{g.n}")
        if not cur.is_blue(v):
            return PressTrace(g, tuple(steps), cur, idx)
        steps.append(PressStep(v, affected_set(cur, v)))
        cur = press(cur, v)
    return PressTrace(g, tuple(steps), cur, None)


def press_leading_sequence(g: BicoloredGraph) -> PressTrace:
    """Press 1, 2, ..., rank(matrix) in order; succeeds iff the matrix is LPN."""
    m = matrix_of(g)
    r = bits_rank(m.rows, m.n_rows)
    return run_sequence(g, range(1, r + 1))


def _root_by_elimination(m: GF2Matrix, r: int) -> tuple[int, ...]:
    """Peel r symmetric rank-one layers; the layers are the root's rows.

    Each step k removes column-k-of-work times its transpose, which zeroes
    row and column k; with unit pivots down the diagonal the work matrix
    must vanish after rank many steps.
    """
    work = list(m.rows)
    out = []
    for k in range(r):
        ck = work[k]
        if not ck >> k & 1:
            raise AssertionError("pivot missing during elimination of an LPN matrix")
        out.append(ck)
        mask = ck
        while mask:
            low = mask & -mask
            work[low.bit_length() - 1] ^= ck
            mask ^= low
    if any(work):
        raise AssertionError("nonzero residual after eliminating an LPN matrix")
    return tuple(out) + (0,) * (m.n_rows - r)


def _root_by_pressing(m: GF2Matrix, r: int) -> tuple[int, ...]:
    """Same rows read off a press run: step k's affected set is row k."""
    trace = run_sequence(BicoloredGraph.from_matrix(m), range(1, r + 1))
    if trace.failed_at is not None or not trace.final.is_discrete:
        raise AssertionError("press run failed on an LPN matrix")
    rows = []
    for step in trace.steps:
        row = 0
        for v in step.affected:
            row |= 1 << (v - 1)
        rows.append(row)
    return tuple(rows) + (0,) * (m.n_rows - r)


def instructional_root(m: GF2Matrix) -> GF2Matrix:
    """The canonical root of an LPN matrix: unit diagonal on the first rank
    rows, zero rows after.  Raises NotLpnError otherwise.

    Computed along both routes, pressing and elimination, which must agree;
    they are the same rank-one updates in different clothes.
    """
    if not m.is_square or not m.is_symmetric():
        raise ValueError("roots exist only for square symmetric matrices")
    profile = rank_profile(m)
    if not profile.is_lpn:
        raise NotLpnError(
            "matrix is not leading-principal-nonsingular; "
            "no instructional root exists (try census.cholesky_roots_bruteforce)"
        )
    pressed = _root_by_pressing(m, profile.rank)
    eliminated = _root_by_elimination(m, profile.rank)
    if pressed != eliminated:
        raise AssertionError("press and elimination roots disagree")
    return GF2Matrix(m.n_rows, m.n_cols, pressed)


def enumerate_roots_lpn(m: GF2Matrix) -> Iterator[GF2Matrix]:
    """All roots of an LPN matrix, in the order the exhaustive search uses.

    Every root shares the instructional top block; the trailing
    (n-r) x (n-r) corner ranges over the size-(n-r) members of class C,
    so the stream has exactly counting.lpn_root_count(m) entries.
    """
    top = instructional_root(m)
    n = m.n_rows
    r = rank_profile(m).rank
    if n == r:
        yield top
        return
    for tail in enumerate_class("C", n - r):
        rows = top.rows[:r] + tuple(row << r for row in tail.rows)
        yield GF2Matrix(n, n, rows)


def graph_to_json(g: BicoloredGraph) -> str:
    payload = {
        "n": g.n,
        "blue": list(g.blue_vertices()),
        "edges": [list(e) for e in g.edges()],
    }
    return json.dumps(payload, indent=2) + "\n"


def graph_from_json(text: str) -> BicoloredGraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid graph JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ValueError("graph JSON must be an object")
    missing = {"n", "blue", "edges"} - set(payload)
    if missing:
        raise ValueError(f"graph JSON missing keys: {sorted(missing)}")
    n = payload["n"]
    if not isinstance(n, int) or n < 0:
        raise ValueError("graph JSON field 'n' must be a nonnegative integer")
    return BicoloredGraph.from_edges(n, payload["blue"], payload["edges"])
