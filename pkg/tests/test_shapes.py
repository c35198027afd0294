import pytest
from hypothesis import given, strategies as st

from hooklab.shapes import (
    Kind,
    StrictPartition,
    col_len,
    contains,
    corners,
    covers,
    covers_within,
    diagram,
    hook_cells,
    hook_length,
    outer_corners,
    parse_partition,
    strict_partitions,
    strict_partitions_upto,
    subpartitions,
    verify_w_sum,
    w_set,
    w_total,
    w_universe,
    x_var,
)

strict = st.sets(st.integers(1, 9), max_size=5).map(lambda s: StrictPartition(sorted(s, reverse=True)))


def test_rejects_non_strict():
    with pytest.raises(ValueError):
        StrictPartition((3, 3))
    with pytest.raises(ValueError):
        StrictPartition((2, 0))


@pytest.mark.parametrize("text,parts", [
    ("6532", (6, 5, 3, 2)), ("[10,3,1]", (10, 3, 1)), ("10,3,1", (10, 3, 1)), ("", ()), ("∅", ()),
])
def test_parse(text, parts):
    assert parse_partition(text) == parts


def test_partition_counts():
    # strict partitions of n: 1 1 1 2 2 3 4 5 6 8 10
    assert [sum(1 for _ in strict_partitions(n)) for n in range(11)] == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]


def test_diagrams():
    assert diagram((), Kind.B) == frozenset()
    b = diagram("6532", Kind.B)
    assert len(b) == 16
    assert sorted(c for c in b if c[0] == 1) == [(1, j) for j in range(1, 7)]
    assert sorted(c for c in b if c[0] == 4) == [(4, 4), (4, 5)]
    d = diagram("6532", Kind.D)
    assert d == {(i, j + 1) for i, j in b}
    assert sorted(c for c in d if c[0] == 1) == [(1, j) for j in range(2, 8)]


def test_col_len():
    assert [col_len("6532", i) for i in (5, 6, 7, 8)] == [4, 2, 0, 0]


def test_containment():
    assert contains("2", "432")
    assert not contains("5", "432")
    assert covers("2", "21") and not covers("2", "31")
    assert covers_within((), "21") == [(1,)]
    assert covers_within("2", "432") == [(3,), (2, 1)]


def test_corners():
    assert corners("6532") == [(2, 6), (4, 5)]
    assert outer_corners("6532") == [(1, 7), (3, 6), (5, 5)]
    assert corners(()) == []
    assert corners("6532", Kind.D) == [(2, 7), (4, 6)]


@pytest.mark.parametrize("kind,cell,h", [
    ("B", (2, 2), 5), ("B", (1, 4), 8), ("B", (2, 5), 4), ("D", (1, 4), 8), ("D", (2, 5), 5),
])
def test_hook_lengths(kind, cell, h):
    assert hook_length("6532", kind, cell) == h


def test_hook_multiset_counts_diagonal_twice():
    cells = hook_cells("6532", "B", (1, 4))
    assert len(cells) == 8 and cells.count((4, 4)) == 2
    assert hook_cells("1", "B", (1, 1)) == [(1, 1)]
    with pytest.raises(ValueError):
        hook_cells("6532", "B", (1, 7))


def test_x_var():
    assert [x_var("432", "B", i) for i in range(1, 8)] == [4, 3, 2, -1, -5, -6, -7]
    assert [x_var("432", "D", i) for i in range(1, 8)] == [4, 3, 2, 0, -1, -5, -6]


@given(strict)
def test_x_sequence_decreasing(lam):
    for kind in Kind:
        xs = [x_var(lam, kind, i) for i in range(1, lam.part(1) + len(lam) + 4)]
        assert all(a > b for a, b in zip(xs, xs[1:]))
    assert x_var(lam, Kind.D, len(lam) + 1) == 0


def test_w_sets():
    assert w_set("431", "865321", "B") == {1, 2, 3, 5, 7}
    assert w_set("431", "865321", "D") == {1, 2, 3, 5, 7, 8}
    assert w_set("2", "432", "B") == {1, 2}
    assert w_universe("432") == {1, 2, 3, 4, 5}
    assert w_universe("865321") == set(range(1, 10))


def test_w_sum_values():
    assert w_total("2", "432", "B") == w_total("2", "432", "D") == 7
    assert w_total("431", "865321", "B") == w_total("431", "865321", "D") == 17


@pytest.mark.parametrize("kind", ["B", "D"])
def test_w_sum_all_pairs(kind):
    parts = strict_partitions_upto(10)
    assert all(verify_w_sum(mu, lam, kind) for lam in parts for mu in parts)


@given(strict, strict)
def test_w_set_parity_rule(mu, lam):
    d = w_set(mu, lam, Kind.D)
    assert ((len(lam) + 1) in d) == ((len(lam) - len(mu)) % 2 == 1)


def test_subpartitions():
    subs = subpartitions("432")
    assert all(contains(m, "432") for m in subs)
    assert len(subs) == len(set(subs))
    assert (4, 3, 2) in subs and () in subs
