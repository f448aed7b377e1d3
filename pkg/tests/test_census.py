import pytest
from hypothesis import given
from hypothesis import strategies as st

from f2cholesky.census import (
    BRUTE_CAPS,
    census_by_rank,
    cholesky_roots_bruteforce,
    count_class,
    enumerate_class,
    extend_class_B,
    extend_class_C,
    shard_range,
)
from f2cholesky.counting import closed_form_count, recurrence_table, unified_count
from f2cholesky.gf2 import GF2Matrix, class_equation_holds


def _entries(m):
    return tuple(m.bit(i, j) for i in range(m.n_rows) for j in range(m.n_cols))


def test_frozen_small_streams():
    assert [m.rows for m in enumerate_class("B", 1)] == [(0,)]
    assert [m.rows for m in enumerate_class("B", 2)] == [(0, 0), (2, 0)]
    assert [m.rows for m in enumerate_class("C", 2)] == [(0, 0), (2, 2)]
    assert [m.rows for m in enumerate_class("A", 2)] == [(1, 2), (3, 2)]


def test_stream_counts_match_closed_form():
    for tag in ("A", "B", "C"):
        for n in range(1, 6):
            assert count_class(tag, n) == closed_form_count(n)
    assert count_class("B", 6) == 1952
    assert count_class("C", 6) == 1952


def test_members_satisfy_class_equation():
    for tag in ("A", "B", "C"):
        for n in range(1, 5):
            for m in enumerate_class(tag, n):
                assert class_equation_holds(tag, m)


def test_streams_are_lexicographic():
    for tag in ("A", "B", "C"):
        stream = list(enumerate_class(tag, 5))
        assert stream == sorted(stream, key=_entries)
        assert len(set(m.rows for m in stream)) == len(stream)


def test_caps_raise_helpful_errors():
    with pytest.raises(ValueError, match="recurrence"):
        list(enumerate_class("B", 8))
    with pytest.raises(ValueError):
        count_class("A", 7)
    with pytest.raises(ValueError):
        count_class("B", 0)
    with pytest.raises(ValueError):
        count_class("D", 3)


def test_shard_range_partitions():
    total = 100
    for count in (1, 2, 3, 7, 100, 250):
        ranges = [shard_range(total, i, count) for i in range(count)]
        assert ranges[0][0] == 0 and ranges[-1][1] == total
        for (_, hi), (lo, _) in zip(ranges, ranges[1:]):
            assert hi == lo
    with pytest.raises(ValueError):
        shard_range(10, 2, 2)
    with pytest.raises(ValueError):
        shard_range(10, 0, 0)


@given(st.integers(1, 64), st.sampled_from(["A", "B", "C"]))
def test_sharded_streams_concatenate(shards, tag):
    n = 4
    full = [m.rows for m in enumerate_class(tag, n)]
    merged = []
    total = 0
    for i in range(shards):
        merged.extend(
            m.rows for m in enumerate_class(tag, n, shard_index=i, shard_count=shards)
        )
        total += count_class(tag, n, shard_index=i, shard_count=shards)
    assert merged == full
    assert total == len(full)


def test_sharding_more_shards_than_candidates():
    full = [m.rows for m in enumerate_class("B", 2)]  # 2 candidates only
    merged = [
        m.rows
        for i in range(16)
        for m in enumerate_class("B", 2, shard_index=i, shard_count=16)
    ]
    assert merged == full


def test_extension_base_cases():
    children = list(extend_class_B(GF2Matrix.zeros(1)))
    assert [c.rows for c in children] == [(0, 0), (2, 0)]
    from_empty = list(extend_class_C(GF2Matrix.zeros(0)))
    assert [c.rows for c in from_empty] == [(0,)]
    c2 = list(extend_class_C(GF2Matrix.zeros(1)))
    assert [c.rows for c in c2] == [(0, 0), (2, 2)]


def test_extension_rejects_non_members():
    with pytest.raises(ValueError):
        list(extend_class_B(GF2Matrix.identity(2)))
    with pytest.raises(ValueError):
        list(extend_class_C(GF2Matrix.from_lists([[0, 1], [0, 0]])))
    with pytest.raises(ValueError):
        list(extend_class_B(GF2Matrix.zeros(2, 3)))


def test_extension_partitions_next_size():
    for tag, extend in (("B", extend_class_B), ("C", extend_class_C)):
        for n in range(1, 5):
            children = []
            for parent in enumerate_class(tag, n):
                for child in extend(parent):
                    assert class_equation_holds(tag, child)
                    block = tuple(row & ((1 << n) - 1) for row in child.rows[:n])
                    assert block == parent.rows
                    children.append(child.rows)
            want = sorted(m.rows for m in enumerate_class(tag, n + 1))
            assert sorted(children) == want
            assert len(set(children)) == len(children)


def test_census_methods_agree():
    for tag in ("B", "C"):
        for n in range(1, 7):
            want = recurrence_table(tag, n).counts
            assert census_by_rank(tag, n, "brute").counts == want
            assert census_by_rank(tag, n, "extend").counts == want


def test_census_class_a_full_rank():
    for n in range(1, 6):
        table = census_by_rank("A", n, "brute")
        assert table.counts[n] == table.total == closed_form_count(n)


def test_census_method_validation():
    with pytest.raises(ValueError):
        census_by_rank("A", 3, "extend")
    with pytest.raises(ValueError):
        census_by_rank("B", 3, "sideways")
    with pytest.raises(ValueError):
        census_by_rank("A", 7, "auto")  # past the scan cap, no extension for A
    with pytest.raises(ValueError):
        census_by_rank("B", 13, "auto")
    with pytest.raises(ValueError):
        census_by_rank("B", 0)


def test_roots_bruteforce_examples(example_target, example_roots):
    roots = list(cholesky_roots_bruteforce(example_target))
    assert [r.rows for r in roots] == [r.rows for r in example_roots]
    for r in roots:
        assert r.T @ r == example_target

    diag01 = GF2Matrix.from_lists([[0, 0], [0, 1]])
    assert [u.rows for u in cholesky_roots_bruteforce(diag01)] == [(0, 2), (2, 0)]

    no_roots = GF2Matrix.from_lists([[0, 1], [1, 0]])
    assert list(cholesky_roots_bruteforce(no_roots)) == []


def test_roots_bruteforce_of_zero_is_class_c():
    zero = GF2Matrix.zeros(4)
    assert [u.rows for u in cholesky_roots_bruteforce(zero)] == [
        m.rows for m in enumerate_class("C", 4)
    ]


def test_roots_bruteforce_validation():
    with pytest.raises(ValueError):
        list(cholesky_roots_bruteforce(GF2Matrix.from_lists([[0, 1], [0, 0]])))
    with pytest.raises(ValueError):
        list(cholesky_roots_bruteforce(GF2Matrix.zeros(2, 3)))
    with pytest.raises(ValueError, match="capped"):
        list(cholesky_roots_bruteforce(GF2Matrix.zeros(8)))


def test_roots_found_are_complete():
    # every upper-triangular 3x3 U appears among the roots of its own product
    for bits in range(1 << 6):
        rows = [0, 0, 0]
        k = 0
        for i in range(3):
            for j in range(i, 3):
                if bits >> k & 1:
                    rows[i] |= 1 << j
                k += 1
        u = GF2Matrix(3, 3, tuple(rows))
        m = u.T @ u
        assert u.rows in [r.rows for r in cholesky_roots_bruteforce(m)]


def test_brute_cap_constants():
    assert BRUTE_CAPS == {"A": 6, "B": 7, "C": 7}
