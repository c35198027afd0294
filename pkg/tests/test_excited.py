import pytest

from hooklab.excited import (
    MoveTableau,
    enumerate_excited,
    enumerate_move_tableaux,
    from_move_tableau,
    legal_moves,
    move_tableau_ok,
    move_tableau_ok_everywhere,
    to_move_tableau,
    ExcitedDiagram,
)

B_432_2 = [
    {(1, 1), (1, 2)}, {(1, 1), (2, 3)}, {(1, 1), (3, 4)},
    {(2, 2), (2, 3)}, {(2, 2), (3, 4)}, {(3, 3), (3, 4)},
]
D_432_2 = [{(1, 2), (1, 3)}, {(1, 2), (2, 4)}, {(1, 2), (3, 5)}, {(3, 4), (3, 5)}]


def test_figures():
    assert sorted(map(sorted, (d.cells for d in enumerate_excited("432", "2", "B")))) == sorted(map(sorted, B_432_2))
    assert sorted(map(sorted, (d.cells for d in enumerate_excited("432", "2", "D")))) == sorted(map(sorted, D_432_2))


@pytest.mark.parametrize("kind,n", [("B", 156), ("D", 37)])
def test_counts(kind, n):
    assert len(enumerate_excited("865321", "431", kind)) == n


def test_trivial_cases():
    assert [d.cells for d in enumerate_excited("432", "", "B")] == [frozenset()]
    assert enumerate_excited("432", "5", "B") == []
    assert len(enumerate_excited("432", "432", "D")) == 1


def test_diagonal_move_in_type_d():
    d = ExcitedDiagram(frozenset({(1, 2)}), __import__("hooklab").Kind.D, (4, 3, 2), (1,))
    assert [m.cells for m in legal_moves(d)] == [frozenset({(3, 4)})]


@pytest.mark.parametrize("kind", ["B", "D"])
def test_move_tableau_bijection(kind, pairs8):
    for lam, mu in pairs8:
        diagrams = enumerate_excited(lam, mu, kind)
        tabs = list(enumerate_move_tableaux(mu, lam, kind))
        assert len(diagrams) == len(tabs)
        assert {to_move_tableau(d) for d in diagrams} == set(tabs)
        for t in tabs:
            assert from_move_tableau(t, lam).cells in {d.cells for d in diagrams}
            assert move_tableau_ok(t, lam) == move_tableau_ok_everywhere(t, lam)


def test_move_tableau_example():
    d = sorted(enumerate_excited("432", "2", "D"), key=lambda e: sorted(e.cells))[1]
    assert to_move_tableau(d).rows == ((0, 1),)
    bad = MoveTableau((2,), __import__("hooklab").Kind.D, ((1, 1),))
    assert not bad.is_valid()  # odd diagonal entry


def test_json_round_trip():
    for d in enumerate_excited("432", "2", "B"):
        assert ExcitedDiagram.from_json(d.to_json()) == d
        mt = to_move_tableau(d)
        assert MoveTableau.from_json(mt.to_json(), "B") == mt
