"""Shared fixtures: the 5x5 worked example and small strategy helpers."""

import pytest
from hypothesis import strategies as st

from f2cholesky.gf2 import GF2Matrix


@pytest.fixture
def example_target() -> GF2Matrix:
    """Symmetric 5x5 LPN target of rank 3 with exactly two roots."""
    return GF2Matrix.from_lists(
        [
            [1, 1, 1, 0, 0],
            [1, 0, 0, 1, 0],
            [1, 0, 1, 0, 1],
            [0, 1, 0, 0, 1],
            [0, 0, 1, 1, 1],
        ]
    )


@pytest.fixture
def example_roots() -> tuple[GF2Matrix, GF2Matrix]:
    first = GF2Matrix.from_lists(
        [
            [1, 1, 1, 0, 0],
            [0, 1, 1, 1, 0],
            [0, 0, 1, 1, 1],
            [0, 0, 0, 0, 0],
            [0, 0, 0, 0, 0],
        ]
    )
    second = GF2Matrix.from_lists(
        [
            [1, 1, 1, 0, 0],
            [0, 1, 1, 1, 0],
            [0, 0, 1, 1, 1],
            [0, 0, 0, 0, 1],
            [0, 0, 0, 0, 1],
        ]
    )
    return first, second


@st.composite
def gf2_matrices(draw, max_dim: int = 6, square: bool = False, min_dim: int = 0):
    n_rows = draw(st.integers(min_dim, max_dim))
    n_cols = n_rows if square else draw(st.integers(min_dim, max_dim))
    rows = tuple(
        draw(st.integers(0, (1 << n_cols) - 1)) for _ in range(n_rows)
    )
    return GF2Matrix(n_rows, n_cols, rows)


@st.composite
def symmetric_matrices(draw, max_dim: int = 6, min_dim: int = 1):
    n = draw(st.integers(min_dim, max_dim))
    rows = [0] * n
    for i in range(n):
        for j in range(i, n):
            if draw(st.booleans()):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return GF2Matrix(n, n, tuple(rows))
