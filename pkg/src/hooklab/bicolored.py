"""Shifted bicolored tableaux: validity, membership, weights and enumeration."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .excited import MoveTableau, enumerate_move_tableaux
from .shapes import Cell, Kind, PartitionLike, StrictPartition, as_partition, corners

Entry = tuple[int, bool]  # (value, is_red)
BLACK, RED = False, True


@dataclass(frozen=True)
class BicoloredTableau:
    """Rows of (value, is_red) entries; row i starts at column i (B) or i+1 (D)."""

    kind: Kind
    rows: tuple[tuple[Entry, ...], ...]

    @property
    def shape(self) -> StrictPartition:
        return StrictPartition(len(r) for r in self.rows)

    def start(self, i: int) -> int:
        return i + self.kind.offset

    def is_diagonal(self, i: int, j: int) -> bool:
        return j == i + self.kind.offset

    def cells(self) -> list[Cell]:
        return [
            (i, self.start(i) + c)
            for i, row in enumerate(self.rows, start=1)
            for c in range(len(row))
        ]

    def get(self, i: int, j: int) -> Entry | None:
        if 1 <= i <= len(self.rows):
            c = j - self.start(i)
            if 0 <= c < len(self.rows[i - 1]):
                return self.rows[i - 1][c]
        return None

    def __contains__(self, cell: Cell) -> bool:
        return self.get(*cell) is not None

    def items(self) -> Iterable[tuple[Cell, Entry]]:
        for i, row in enumerate(self.rows, start=1):
            for c, e in enumerate(row):
                yield (i, self.start(i) + c), e

    def variable(self, i: int, j: int) -> int:
        """Index of the variable the entry at (i, j) stands for."""
        value, red = self.rows[i - 1][j - self.start(i)]
        return value + (j if red else i)

    def values(self) -> MoveTableau:
        """Forget colors."""
        return MoveTableau(self.shape, self.kind, tuple(tuple(v for v, _ in r) for r in self.rows))

    def is_valid(self) -> bool:
        try:
            self.shape
        except ValueError:
            return False
        for (i, j), (v, red) in self.items():
            if v < 0:
                return False
            if self.is_diagonal(i, j):
                if self.kind is Kind.B and red:
                    return False
                if self.kind is Kind.D and v % 2:
                    return False
            for nb in (self.get(i, j + 1), self.get(i + 1, j)):
                if nb is not None and nb[0] < v:
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "rows": [[{"v": v, "c": "r" if red else "b"} for v, red in row] for row in self.rows],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "BicoloredTableau":
        rows = tuple(
            tuple((int(e["v"]), e["c"] == "r") for e in row) for row in data["rows"]
        )
        return cls(Kind.parse(data["kind"]), rows)

    @classmethod
    def from_text(cls, rows: Sequence[str] | str, kind: Kind | str) -> "BicoloredTableau":
        """Build from rows like ``"0 r0 r1 r1"`` (``r`` marks red), rows separated by ``/``."""
        if isinstance(rows, str):
            rows = rows.split("/")
        parsed = []
        for row in rows:
            entries = []
            for tok in row.split():
                red = tok.startswith("r")
                entries.append((int(tok[1:] if red else tok), red))
            parsed.append(tuple(entries))
        return cls(Kind.parse(kind), tuple(parsed))

    def to_text(self) -> str:
        return " / ".join(
            " ".join(f"r{v}" if red else str(v) for v, red in row) for row in self.rows
        )

    def render(self) -> str:
        width = max((len(f"r{v}") for row in self.rows for v, _ in row), default=1)
        lines = []
        for i, row in enumerate(self.rows, start=1):
            pad = " " * ((width + 1) * (i - 1))
            lines.append(pad + " ".join(
                (f"r{v}" if red else str(v)).rjust(width) for v, red in row))
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.to_text() or "∅"

    @classmethod
    def empty(cls, kind: Kind | str) -> "BicoloredTableau":
        return cls(Kind.parse(kind), ())


def is_member(t: BicoloredTableau, lam: PartitionLike) -> bool:
    """Whether t lies in the finite set of tableaux of its shape bounded by lam."""
    lam = as_partition(lam)
    off = t.kind.offset
    for i, j in corners(t.shape, t.kind):
        v = t.get(i, j)[0]
        if j > lam.part(i + v) + i - 1 + off:
            return False
    return True


def weight(t: BicoloredTableau) -> Counter:
    """Weight monomial as a Counter {variable index: exponent}."""
    return Counter(t.variable(i, j) for i, j in t.cells())


def enumerate_bicolored(mu: PartitionLike, lam: PartitionLike, kind: Kind | str) -> list[BicoloredTableau]:
    """All bicolored tableaux of shape mu bounded by lam, in canonical order."""
    kind = Kind.parse(kind)
    out = []
    for mt in enumerate_move_tableaux(mu, lam, kind):
        out.extend(colorings(mt))
    return out


def colorings(mt: MoveTableau) -> list[BicoloredTableau]:
    kind = mt.kind
    choices = []
    for (i, j), v in mt.entries.items():
        if kind is Kind.B and j == i:
            choices.append(((v, BLACK),))
        else:
            choices.append(((v, BLACK), (v, RED)))
    lengths = list(mt.shape)
    out = []
    for combo in product(*choices):
        rows, pos = [], 0
        for p in lengths:
            rows.append(tuple(combo[pos:pos + p]))
            pos += p
        out.append(BicoloredTableau(kind, tuple(rows)))
    return out
