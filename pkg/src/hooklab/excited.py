"""Excited moves, excited diagrams and their move-count tableaux."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Mapping

from .shapes import (
    Cell,
    Kind,
    PartitionLike,
    StrictPartition,
    as_partition,
    contains,
    corners,
    diagram,
)


@dataclass(frozen=True)
class ExcitedDiagram:
    cells: frozenset[Cell]
    kind: Kind
    ambient: StrictPartition
    base: StrictPartition

    def sorted_cells(self) -> list[Cell]:
        return sorted(self.cells)

    def to_json(self) -> dict:
        return {
            "lambda": list(self.ambient),
            "mu": list(self.base),
            "kind": self.kind.value,
            "cells": [list(c) for c in self.sorted_cells()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "ExcitedDiagram":
        return cls(
            frozenset((int(i), int(j)) for i, j in data["cells"]),
            Kind.parse(data["kind"]),
            StrictPartition(data["lambda"]),
            StrictPartition(data["mu"]),
        )


@dataclass(frozen=True)
class MoveTableau:
    """Shape-mu filling recording how far each cell of mu has been moved."""

    shape: StrictPartition
    kind: Kind
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if tuple(len(r) for r in self.rows) != tuple(self.shape):
            raise ValueError("row lengths do not match the shape")

    def start(self, i: int) -> int:
        return i + self.kind.offset

    @property
    def entries(self) -> dict[Cell, int]:
        return {
            (i, self.start(i) + c): v
            for i, row in enumerate(self.rows, start=1)
            for c, v in enumerate(row)
        }

    def get(self, i: int, j: int) -> int | None:
        if 1 <= i <= len(self.rows):
            c = j - self.start(i)
            if 0 <= c < len(self.rows[i - 1]):
                return self.rows[i - 1][c]
        return None

    def is_valid(self) -> bool:
        """Weakly increasing rows and columns, even diagonal in type D."""
        for (i, j), v in self.entries.items():
            if v < 0:
                return False
            right, below = self.get(i, j + 1), self.get(i + 1, j)
            if right is not None and right < v:
                return False
            if below is not None and below < v:
                return False
            if self.kind is Kind.D and j == i + 1 and v % 2:
                return False
        return True

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: Mapping, kind: Kind | str) -> "MoveTableau":
        return cls(
            StrictPartition(data["shape"]),
            Kind.parse(kind),
            tuple(tuple(int(v) for v in r) for r in data["rows"]),
        )

    @classmethod
    def zero(cls, mu: PartitionLike, kind: Kind | str) -> "MoveTableau":
        mu = as_partition(mu)
        return cls(mu, Kind.parse(kind), tuple((0,) * p for p in mu))


def _base_diagram(lam: PartitionLike, mu: PartitionLike, kind: Kind | str) -> ExcitedDiagram:
    lam, mu, kind = as_partition(lam), as_partition(mu), Kind.parse(kind)
    return ExcitedDiagram(diagram(mu, kind), kind, lam, mu)


def legal_moves(d: ExcitedDiagram) -> list[ExcitedDiagram]:
    ambient = diagram(d.ambient, d.kind)
    out = []
    for i, j in sorted(d.cells):
        if d.kind is Kind.D and j == i + 1:
            needed = [(i, i + 2), (i, i + 3), (i + 1, i + 2), (i + 1, i + 3), (i + 2, i + 3)]
            target = (i + 2, i + 3)
        else:
            needed = [(i + 1, j), (i, j + 1), (i + 1, j + 1)]
            target = (i + 1, j + 1)
        # cells left of the shifted boundary never block a move
        if target in ambient and not any(c in d.cells for c in needed):
            moved = (d.cells - {(i, j)}) | {target}
            out.append(ExcitedDiagram(moved, d.kind, d.ambient, d.base))
    return out


def enumerate_excited(lam: PartitionLike, mu: PartitionLike, kind: Kind | str) -> list[ExcitedDiagram]:
    """All excited diagrams of lam/mu, sorted by their cell lists."""
    lam, mu, kind = as_partition(lam), as_partition(mu), Kind.parse(kind)
    if not contains(mu, lam):
        return []
    start = _base_diagram(lam, mu, kind)
    seen = {start.cells: start}
    queue = deque([start])
    while queue:
        for nxt in legal_moves(queue.popleft()):
            if nxt.cells not in seen:
                seen[nxt.cells] = nxt
                queue.append(nxt)
    return sorted(seen.values(), key=ExcitedDiagram.sorted_cells)


def to_move_tableau(d: ExcitedDiagram) -> MoveTableau:
    # moves never reorder cells along a diagonal, so match them in order per content
    origin: dict[int, list[Cell]] = {}
    for c in sorted(diagram(d.base, d.kind)):
        origin.setdefault(c[1] - c[0], []).append(c)
    placed: dict[int, list[Cell]] = {}
    for c in sorted(d.cells):
        placed.setdefault(c[1] - c[0], []).append(c)
    moves: dict[Cell, int] = {}
    for content, cells in origin.items():
        targets = placed.get(content, [])
        if len(targets) != len(cells):
            raise ValueError("cell set is not an excited diagram of its base shape")
        for src, dst in zip(cells, targets):
            if dst[0] < src[0]:
                raise ValueError("cell set is not an excited diagram of its base shape")
            moves[src] = dst[0] - src[0]
    off = d.kind.offset
    rows = tuple(
        tuple(moves[(i, j)] for j in range(i + off, i + off + p))
        for i, p in enumerate(d.base, start=1)
    )
    return MoveTableau(d.base, d.kind, rows)


def move_tableau_ok(t: MoveTableau, lam: PartitionLike, kind: Kind | str | None = None) -> bool:
    """Check j <= lam_{i+r} + i - 1 (B) or + i (D) at the corners of the shape."""
    lam = as_partition(lam)
    kind = t.kind if kind is None else Kind.parse(kind)
    return all(_fits(t.get(i, j), i, j, lam, kind) for i, j in corners(t.shape, kind))


def move_tableau_ok_everywhere(t: MoveTableau, lam: PartitionLike) -> bool:
    lam = as_partition(lam)
    return all(_fits(r, i, j, lam, t.kind) for (i, j), r in t.entries.items())


def _fits(r: int, i: int, j: int, lam: StrictPartition, kind: Kind) -> bool:
    return j <= lam.part(i + r) + i - 1 + kind.offset


def from_move_tableau(t: MoveTableau, lam: PartitionLike, kind: Kind | str | None = None) -> ExcitedDiagram:
    lam = as_partition(lam)
    kind = t.kind if kind is None else Kind.parse(kind)
    if not t.is_valid() or not move_tableau_ok(t, lam, kind):
        raise ValueError("move tableau does not encode an excited diagram inside lambda")
    cells = frozenset((i + r, j + r) for (i, j), r in t.entries.items())
    return ExcitedDiagram(cells, kind, lam, t.shape)


def enumerate_move_tableaux(mu: PartitionLike, lam: PartitionLike, kind: Kind | str) -> Iterator[MoveTableau]:
    """Valid move tableaux of shape mu inside lam, in row-major lexicographic order."""
    mu, lam, kind = as_partition(mu), as_partition(lam), Kind.parse(kind)
    if not contains(mu, lam):
        return
    off = kind.offset
    cells = [(i, j) for i, p in enumerate(mu, start=1) for j in range(i + off, i + off + p)]
    values: dict[Cell, int] = {}

    def rec(pos: int) -> Iterator[MoveTableau]:
        if pos == len(cells):
            yield MoveTableau(
                mu, kind,
                tuple(tuple(values[(i, j)] for j in range(i + off, i + off + p))
                      for i, p in enumerate(mu, start=1)),
            )
            return
        i, j = cells[pos]
        low = max(values.get((i, j - 1), 0), values.get((i - 1, j), 0))
        diagonal = kind is Kind.D and j == i + 1
        r = low + (low % 2 if diagonal else 0)
        while _fits(r, i, j, lam, kind):
            values[(i, j)] = r
            yield from rec(pos + 1)
            r += 2 if diagonal else 1
        values.pop((i, j), None)

    yield from rec(0)
