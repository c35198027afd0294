import pytest

from hooklab.bicolored import BicoloredTableau, enumerate_bicolored, weight
from hooklab.bump import (
    INF,
    BumpState,
    Dir,
    InsertionTrace,
    bump,
    count_insertions,
    family_partitions,
    insert,
    insert_with_cell,
    inverse_insert,
    k_index,
    repeated_insert,
    s_family,
    verify_bijection,
    verify_complexity,
    verify_sieve,
    virtual_entry,
)
from hooklab.checks import check_insertions, check_sieve
from hooklab.shapes import Kind, w_set

B_START = "0 r0 r1 r1/1 2 2/2"
D_START = "r0 r0 r0 r2/0 r1 2/r2"


def tab(text, kind):
    return BicoloredTableau.from_text(text, kind)


def test_virtual_plane():
    t = enumerate_bicolored("431", "865321", "B")[0]
    assert virtual_entry(t, 0, 3) == 0
    assert virtual_entry(t, 2, 5) == INF
    assert virtual_entry(t, 3, 2) == 0
    assert virtual_entry(tab("0 0", "D"), 1, 1) == 0  # left of the type-D boundary


def test_state_invariants():
    t = tab("0", "B")
    with pytest.raises(ValueError):
        BumpState(t, (1, 1), Dir.STOP, 3)
    with pytest.raises(ValueError):
        BumpState(t, (0, 0), Dir.RIGHT, 3)


def test_first_bumps_type_b():
    s = bump(BumpState(tab(B_START, "B"), (0, 0), Dir.DOWN, 1))
    assert (s.cell, s.dir, s.k) == ((1, 1), Dir.RIGHT, 1)
    assert s.tableau.get(1, 1) == (0, False)


def test_first_bump_type_d():
    s = bump(BumpState(tab(D_START, "D"), (0, 0), Dir.DOWN, 1))
    assert (s.cell, s.dir, s.k) == ((1, 2), Dir.RIGHT, 2)
    assert s.tableau.get(1, 2) == (0, False)


def test_insert_worked_example_b():
    out, cell = insert_with_cell(tab(B_START, "B"), 1)
    assert str(out) == "0 0 r1 r1 3 / 0 1 2 / 2"
    assert cell == (1, 5) and out.get(1, 5) == (3, False)


def test_small_inserts():
    out, cell = insert_with_cell(tab("0", "B"), 2)
    assert cell == (1, 2) and out.get(1, 2) == (0, True)
    out, cell = insert_with_cell(BicoloredTableau.empty("B"), 3)
    assert cell == (1, 1) and out.get(1, 1) == (2, False)
    assert inverse_insert(out) == (BicoloredTableau.empty("B"), 3)


def test_repeated_insert_worked_examples():
    out, tr = repeated_insert(tab(B_START, "B"), 1, "865321")
    assert tr.insertions == 3
    assert str(out) == "0 0 r1 r1 / 0 r1 1 / 1 2"
    out, tr = repeated_insert(tab(D_START, "D"), 1, "865321")
    assert tr.insertions == 3
    assert str(out) == "0 r0 r0 1 / 0 r0 r1 / 2 r2"
    assert out.get(3, 5) == (2, True)


def test_trace_lines():
    tr = InsertionTrace()
    repeated_insert(tab(B_START, "B"), 1, "865321", tr)
    lines = tr.lines()
    assert lines[0] == "insertion 1"
    assert lines[1] == "step cell=(0,0) dir=D k=1 pot=1"
    assert lines[-1] == "step cell=(3,4) dir=S k=inf pot=inf"
    assert [c for c in lines if c.startswith("insertion")] == ["insertion 1", "insertion 2", "insertion 3"]


def test_inverse_needs_shape_when_ambiguous():
    out = tab("0 0 0/1", "B")
    assert inverse_insert(out, (2, 1)) == (tab("0 0/1", "B"), 1)
    assert inverse_insert(out, (3,)) == (tab("0 0 r0", "B"), 1)
    with pytest.raises(AssertionError):
        inverse_insert(out)


@pytest.mark.parametrize("kind,hist", [
    ("B", (17398, 6080, 977, 455, 25, 25)),
    ("D", (42672, 11087, 2182, 741, 88, 62)),
])
def test_bijection_statistics(kind, hist):
    rep = verify_bijection("431", "865321", kind)
    assert rep.ok and rep.histogram_tuple() == hist
    assert rep.domain_size == len(w_set("431", "865321", kind)) * (4992 if kind == "B" else 9472)


def test_bijection_empty_case():
    rep = verify_bijection("21", "21", "B")
    assert rep.ok and rep.domain_size == 0 and rep.codomain_size == 0


@pytest.mark.parametrize("mu,lam,kind", [("2", "432", "B"), ("2", "432", "D"), ("", "1", "B")])
def test_sieve_examples(mu, lam, kind):
    assert verify_sieve(mu, lam, kind)


def test_s_family_start():
    t, k = s_family(4, 0)
    assert k == 2 and t.shape == (6, 4, 3, 2, 1)
    for (i, j), (v, red) in t.items():
        assert v == 0
        assert red == (i == 2 and 3 <= j <= 5)


def test_s_family_diagonal_black():
    for m in range(1, 6):
        for n in range(2 ** m):
            t, _ = s_family(m, n)
            assert all(t.get(i, i) == (0, False) for i in range(1, len(t.rows) + 1))
    with pytest.raises(ValueError):
        s_family(3, 8)


def test_k_index():
    assert [k_index(n) for n in range(8)] == [2, 1, 3, 1, 3, 1, 4, 1]


def test_worst_case_counts():
    mu, lam = family_partitions(4)
    t, k = s_family(4, 0)
    assert count_insertions(t, k, lam)[1] == 16
    assert verify_complexity(1) == 2
    assert verify_complexity(4) == 16


def test_second_state_matches_family():
    t, k = s_family(4, 0)
    out, cell = insert_with_cell(t, k)
    expected, _ = s_family(4, 1)
    assert cell == (1, 7)
    rest = BicoloredTableau(Kind.B, out.rows[:0] + (out.rows[0][:-1],) + out.rows[1:])
    assert rest == expected


def test_properties_small():
    rep = check_insertions(6)
    assert rep.ok, rep.examples
    n, bad = check_sieve(6)
    assert n > 0 and not bad


def test_weights_preserved_by_repeated_insert():
    lam = "865321"
    for t in enumerate_bicolored("431", lam, "D")[::97]:
        for k in w_set("431", lam, "D"):
            out, _ = repeated_insert(t, k, lam)
            w = weight(t)
            w[k] += 1
            assert weight(out) == w
