"""Strict partitions, shifted diagrams of types B and D, hooks and index sets."""
from __future__ import annotations

import json
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Union

Cell = tuple[int, int]


class Kind(str, Enum):
    B = "B"
    D = "D"

    @property
    def offset(self) -> int:
        """Column shift of the diagram: rows start at column i (B) or i+1 (D)."""
        return 0 if self is Kind.B else 1

    @classmethod
    def parse(cls, value: Union[str, "Kind"]) -> "Kind":
        if isinstance(value, Kind):
            return value
        try:
            return cls(str(value).upper())
        except ValueError:
            raise ValueError(f"unknown diagram kind {value!r}") from None


class StrictPartition(tuple):
    """A strictly decreasing tuple of positive integers.

    Behaves as a plain tuple (0-based indexing, lexicographic order); the
    1-based accessor :meth:`part` follows the usual convention
    ``lambda_i = 0`` for ``i > len``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"parts must be positive: {parts}")
        for a, b in zip(parts, parts[1:]):
            if a <= b:
                raise ValueError(f"parts must be strictly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate_part(self, i: int) -> int:
        return col_len(self, i)

    def __repr__(self) -> str:
        return f"StrictPartition({format_partition(self)})"

    def __str__(self) -> str:
        return format_partition(self)


PartitionLike = Union[StrictPartition, Iterable[int], str]


def as_partition(value: PartitionLike) -> StrictPartition:
    if isinstance(value, StrictPartition):
        return value
    if isinstance(value, str):
        return parse_partition(value)
    return StrictPartition(value)


def parse_partition(text: str) -> StrictPartition:
    """Parse ``"6532"``, ``"[10,3,1]"``, ``"10,3,1"`` or ``""``/``"0"``/``"∅"``."""
    text = text.strip()
    if text in ("", "0", "∅", "[]", "()", "e", "empty"):
        return StrictPartition()
    if text[0] in "[(":
        return StrictPartition(json.loads("[" + text[1:-1] + "]"))
    if "," in text:
        return StrictPartition(int(p) for p in text.split(","))
    if not text.isdigit():
        raise ValueError(f"cannot parse partition {text!r}")
    return StrictPartition(int(c) for c in text)


def format_partition(lam: Iterable[int]) -> str:
    parts = tuple(lam)
    if not parts:
        return "∅"
    if all(p <= 9 for p in parts):
        return "".join(str(p) for p in parts)
    return "[" + ",".join(str(p) for p in parts) + "]"


def strict_partitions(n: int) -> Iterator[StrictPartition]:
    """All strict partitions of n, lexicographically decreasing."""

    def rec(rest: int, bound: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, bound), 0, -1):
            for tail in rec(rest - p, p - 1):
                yield (p,) + tail

    for parts in rec(n, n):
        yield StrictPartition(parts)


def strict_partitions_upto(n: int) -> list[StrictPartition]:
    return [lam for size in range(n + 1) for lam in strict_partitions(size)]


def subpartitions(lam: PartitionLike) -> list[StrictPartition]:
    """All strict mu contained in lam (including the empty one and lam itself)."""
    lam = as_partition(lam)
    out: list[StrictPartition] = []

    def rec(i: int, bound: int, acc: tuple[int, ...]) -> None:
        out.append(StrictPartition(acc))
        if i > len(lam):
            return
        for p in range(min(bound, lam[i - 1]), 0, -1):
            rec(i + 1, p - 1, acc + (p,))

    rec(1, lam.part(1), ())
    return sorted(out, reverse=True)


def diagram(lam: PartitionLike, kind: Kind | str) -> frozenset[Cell]:
    lam = as_partition(lam)
    off = Kind.parse(kind).offset
    return frozenset(
        (i, j)
        for i, p in enumerate(lam, start=1)
        for j in range(i + off, i + off + p)
    )


def row_cells(lam: StrictPartition, kind: Kind, i: int) -> list[Cell]:
    off = kind.offset
    return [(i, j) for j in range(i + off, i + off + lam.part(i))]


@lru_cache(maxsize=None)
def _conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    width = lam[0] if lam else 0
    counts = [0] * (width + 1)
    for i, p in enumerate(lam, start=1):
        for j in range(i, i + p):
            counts[j] += 1
    return tuple(counts[1:])


def col_len(lam: PartitionLike, i: int) -> int:
    """Number of cells in column i of the type-B diagram."""
    conj = _conjugate(tuple(as_partition(lam)))
    return conj[i - 1] if 1 <= i <= len(conj) else 0


def contains(mu: PartitionLike, lam: PartitionLike) -> bool:
    mu, lam = as_partition(mu), as_partition(lam)
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def covers(mu: PartitionLike, lam: PartitionLike) -> bool:
    """True when lam covers mu (mu is contained in lam, one cell smaller)."""
    mu, lam = as_partition(mu), as_partition(lam)
    return contains(mu, lam) and lam.size - mu.size == 1


def add_cell_options(mu: StrictPartition) -> list[StrictPartition]:
    """All strict partitions covering mu, lexicographically decreasing."""
    out = []
    parts = list(mu)
    for i in range(len(parts)):
        if i == 0 or parts[i] + 1 < parts[i - 1]:
            bigger = parts.copy()
            bigger[i] += 1
            out.append(StrictPartition(bigger))
    if not parts or parts[-1] > 1:
        out.append(StrictPartition(parts + [1]))
    return sorted(out, reverse=True)


def covers_within(mu: PartitionLike, lam: PartitionLike) -> list[StrictPartition]:
    mu, lam = as_partition(mu), as_partition(lam)
    return [nu for nu in add_cell_options(mu) if contains(nu, lam)]


def corners(lam: PartitionLike, kind: Kind | str = Kind.B) -> list[Cell]:
    """Removable cells, row-major."""
    lam = as_partition(lam)
    off = Kind.parse(kind).offset
    out = []
    for i in range(1, len(lam) + 1):
        # removing the last cell of row i keeps strictness unless the row below is one shorter
        if lam.part(i) - 1 > lam.part(i + 1) or (lam.part(i) == 1 and i == len(lam)):
            out.append((i, i + lam.part(i) - 1 + off))
    return out


def outer_corners(lam: PartitionLike, kind: Kind | str = Kind.B) -> list[Cell]:
    """Addable cells, row-major."""
    lam = as_partition(lam)
    off = Kind.parse(kind).offset
    out = []
    for nu in sorted(add_cell_options(lam), key=lambda nu: _added_row(lam, nu)):
        i = _added_row(lam, nu)
        out.append((i, i + nu.part(i) - 1 + off))
    return out


def _added_row(mu: StrictPartition, nu: StrictPartition) -> int:
    for i in range(1, len(nu) + 1):
        if nu.part(i) != mu.part(i):
            return i
    raise ValueError("partitions are equal")


def added_cell(mu: PartitionLike, nu: PartitionLike, kind: Kind | str = Kind.B) -> Cell:
    """The unique cell of nu not in mu, for a cover mu < nu."""
    mu, nu = as_partition(mu), as_partition(nu)
    if not covers(mu, nu):
        raise ValueError(f"{nu} does not cover {mu}")
    i = _added_row(mu, nu)
    return (i, i + nu.part(i) - 1 + Kind.parse(kind).offset)


def _check_cell(lam: StrictPartition, kind: Kind, u: Cell) -> None:
    i, j = u
    if not (1 <= i <= len(lam) and i + kind.offset <= j < i + kind.offset + lam[i - 1]):
        raise ValueError(f"cell {u} is not in the type-{kind.value} diagram of {lam}")


def hook_cells(lam: PartitionLike, kind: Kind | str, u: Cell) -> list[Cell]:
    """The hook of u as a multiset (a list, possibly with a repeated diagonal cell)."""
    lam, kind = as_partition(lam), Kind.parse(kind)
    _check_cell(lam, kind, u)
    i, j = u
    ell = len(lam)
    arm = [(i, c) for c in range(j, i + kind.offset + lam[i - 1])]
    if kind is Kind.B and i == j:
        return arm
    leg = [(r, j) for r in range(i + 1, ell + 1) if (r, j) in _diagram_set(lam, kind)]
    # row j of the diagram: in B it starts at (j, j), counting that cell a second time
    tail = row_cells(lam, kind, j) if j <= ell else []
    return arm + leg + tail


@lru_cache(maxsize=4096)
def _diagram_set(lam: StrictPartition, kind: Kind) -> frozenset[Cell]:
    return diagram(lam, kind)


def hook_length(lam: PartitionLike, kind: Kind | str, u: Cell) -> int:
    return len(hook_cells(lam, kind, u))


def hook_lengths(lam: PartitionLike, kind: Kind | str) -> dict[Cell, int]:
    lam, kind = as_partition(lam), Kind.parse(kind)
    return {u: hook_length(lam, kind, u) for u in sorted(diagram(lam, kind))}


def content(lam: PartitionLike, kind: Kind | str, u: Cell) -> int:
    lam, kind = as_partition(lam), Kind.parse(kind)
    _check_cell(lam, kind, u)
    return u[1] - u[0]


def x_var(lam: PartitionLike, kind: Kind | str, i: int) -> int:
    """Integer value of the i-th variable in the specialization attached to lam."""
    lam, kind = as_partition(lam), Kind.parse(kind)
    if i < 1:
        raise ValueError("index must be positive")
    if i <= len(lam):
        return lam[i - 1]
    if kind is Kind.B:
        return col_len(lam, i) - i
    return col_len(lam, i - 1) - i + 1


def _index_cutoff(mu: StrictPartition, lam: StrictPartition) -> int:
    return lam.part(1) + len(lam) + len(mu) + mu.part(1) + 2


def w_set(mu: PartitionLike, lam: PartitionLike, kind: Kind | str) -> frozenset[int]:
    """Indices k whose variables sum to |lam| - |mu| under the lam-specialization."""
    mu, lam, kind = as_partition(mu), as_partition(lam), Kind.parse(kind)
    ell = len(lam)
    cutoff = _index_cutoff(mu, lam)
    mu_parts = set(mu)
    mu_diag = {col_len(mu, i) - i for i in range(1, cutoff + 1)}
    out = {k for k in range(1, ell + 1) if lam[k - 1] not in mu_parts}
    if kind is Kind.B:
        out.update(k for k in range(ell + 1, cutoff + 1) if col_len(lam, k) - k not in mu_diag)
    else:
        if (ell - len(mu)) % 2:
            out.add(ell + 1)
        # type D reads column k-1, matching x_k = lam'_{k-1} - (k-1)
        out.update(k for k in range(ell + 2, cutoff + 2)
                   if col_len(lam, k - 1) - (k - 1) not in mu_diag)
    return frozenset(out)


def w_universe(lam: PartitionLike) -> frozenset[int]:
    lam = as_partition(lam)
    return frozenset(range(1, lam.part(1) + 2))


def w_total(mu: PartitionLike, lam: PartitionLike, kind: Kind | str) -> int:
    """Sum of the lam-specialized variables over the W-set."""
    return sum(x_var(lam, kind, k) for k in w_set(mu, lam, kind))


def verify_w_sum(mu: PartitionLike, lam: PartitionLike, kind: Kind | str) -> bool:
    mu, lam = as_partition(mu), as_partition(lam)
    return w_total(mu, lam, kind) == lam.size - mu.size
