from fractions import Fraction
from math import factorial

import pytest

from hooklab.counting import (
    count_all,
    enumerate_syt,
    f_classical,
    f_naruse,
    f_recursive,
    f_straight,
    naruse_sum,
    staircase,
    staircase_complement,
)
from hooklab.shapes import contains, strict_partitions_upto, subpartitions

# the twelve tableaux of shape 432/2, rows read left to right from the first free cell
DRAWN_432_2 = {
    "1 2/3 4 5/6 7", "1 2/3 4 6/5 7", "1 3/2 4 5/6 7", "1 3/2 4 6/5 7",
    "1 4/2 3 5/6 7", "1 4/2 3 6/5 7", "1 5/2 3 6/4 7", "2 3/1 4 5/6 7",
    "2 3/1 4 6/5 7", "2 4/1 3 5/6 7", "2 4/1 3 6/5 7", "2 5/1 3 6/4 7",
}


def _text(t):
    return "/".join(" ".join(str(v) for v in row if v is not None) for row in t.rows())


def test_syt_examples():
    assert len(enumerate_syt("42")) == 5
    assert {_text(t) for t in enumerate_syt("432", "2")} == DRAWN_432_2
    assert len(enumerate_syt("543", "543")) == 1
    assert all(t.is_standard() for t in enumerate_syt("543", "2"))
    with pytest.raises(ValueError):
        enumerate_syt("432", "5")


def test_golden_values():
    for lam, mu, f in [("42", "", 5), ("432", "2", 12), ("543", "2", 110)]:
        assert f_naruse(lam, mu, "B") == f_naruse(lam, mu, "D") == f_recursive(lam, mu) == f
        assert len(enumerate_syt(lam, mu)) == f
    assert f_classical("42") == 5 and f_classical("1") == 1 and f_classical("7") == 1


def test_naruse_432_2_terms():
    # 7!/prod(hooks) times the sum of hook products over excited diagrams
    assert naruse_sum("432", "2", "B") * 4 * 7 * 6 * 3 * 3 * 5 * 2 * 2 * 1 == 4 * 7 + 4 * 5 + 4 + 3 * 5 + 3 + 2
    assert naruse_sum("432", "2", "D") * 7 * 6 * 4 * 3 * 5 * 3 * 2 * 2 * 1 == 7 * 6 + 7 * 3 + 7 + 2


def test_three_way_agreement():
    for lam in strict_partitions_upto(9):
        for mu in subpartitions(lam):
            assert count_all(lam, mu).agree


def test_large_example():
    r = count_all("865321", "431")
    assert r.agree


def test_staircase_specialization():
    checked = 0
    for lam in strict_partitions_upto(9):
        st = staircase(len(lam))
        if contains(st, lam):
            assert f_naruse(lam, st, "B") == f_straight(staircase_complement(lam))
            checked += 1
    assert checked > 10


def test_straight_shape_values():
    assert f_straight([2, 1]) == 2
    assert f_straight([3, 2]) == 5
    assert f_straight([]) == 1


def test_empty_inner_is_classical():
    for lam in strict_partitions_upto(9):
        assert f_naruse(lam, (), "B") == f_classical(lam)


def test_sums_are_integral_after_scaling():
    for lam in strict_partitions_upto(8):
        for mu in subpartitions(lam):
            v = factorial(lam.size - mu.size) * naruse_sum(lam, mu, "D")
            assert isinstance(v, Fraction) and v.denominator == 1
