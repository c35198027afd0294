"""Standard tableaux of skew shifted shapes and the ways of counting them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

from .excited import enumerate_excited
from .shapes import (
    Cell,
    Kind,
    PartitionLike,
    StrictPartition,
    added_cell,
    as_partition,
    contains,
    covers_within,
    diagram,
    hook_lengths,
)


@dataclass(frozen=True)
class SkewSYT:
    """Entries 1..n on the cells of lam/mu, in type-B coordinates."""

    outer: StrictPartition
    inner: StrictPartition
    entries: dict[Cell, int]

    def __hash__(self) -> int:
        return hash((self.outer, self.inner, frozenset(self.entries.items())))

    def cell_of(self, k: int) -> Cell:
        for u, v in self.entries.items():
            if v == k:
                return u
        raise KeyError(k)

    def is_standard(self) -> bool:
        e = self.entries
        if sorted(e.values()) != list(range(1, len(e) + 1)):
            return False
        for (i, j), v in e.items():
            for nb in ((i, j + 1), (i + 1, j)):
                if nb in e and e[nb] <= v:
                    return False
        return True

    def rows(self) -> list[list[int | None]]:
        """Entries row by row from the diagonal; None marks cells of mu."""
        out = []
        for i, p in enumerate(self.outer, start=1):
            out.append([self.entries.get((i, j)) for j in range(i, i + p)])
        return out

    def to_json(self) -> dict:
        return {"lambda": list(self.outer), "mu": list(self.inner), "rows": self.rows()}


def _check(lam: StrictPartition, mu: StrictPartition) -> None:
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")


def iter_syt(lam: PartitionLike, mu: PartitionLike = ()) -> Iterator[SkewSYT]:
    lam, mu = as_partition(lam), as_partition(mu)
    _check(lam, mu)
    entries: dict[Cell, int] = {}

    def rec(nu: StrictPartition, n: int) -> Iterator[SkewSYT]:
        if nu == lam:
            yield SkewSYT(lam, mu, dict(entries))
            return
        for nxt in covers_within(nu, lam):
            u = added_cell(nu, nxt)
            entries[u] = n
            yield from rec(nxt, n + 1)
            del entries[u]

    yield from rec(mu, 1)


def enumerate_syt(lam: PartitionLike, mu: PartitionLike = ()) -> list[SkewSYT]:
    return list(iter_syt(lam, mu))


def naruse_sum(lam: PartitionLike, mu: PartitionLike, kind: Kind | str) -> Fraction:
    """Sum over excited diagrams D of the product of 1/h(u) over cells outside D."""
    lam, mu, kind = as_partition(lam), as_partition(mu), Kind.parse(kind)
    _check(lam, mu)
    hooks = hook_lengths(lam, kind)
    full = diagram(lam, kind)
    total = Fraction(0)
    for d in enumerate_excited(lam, mu, kind):
        total += Fraction(1, prod(hooks[u] for u in full - d.cells))
    return total


def f_naruse(lam: PartitionLike, mu: PartitionLike, kind: Kind | str) -> int:
    lam, mu = as_partition(lam), as_partition(mu)
    value = factorial(lam.size - mu.size) * naruse_sum(lam, mu, kind)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral count {value} for {lam}/{mu}")
    return value.numerator


def f_recursive(lam: PartitionLike, mu: PartitionLike = ()) -> int:
    lam, mu = as_partition(lam), as_partition(mu)
    _check(lam, mu)
    return _f_rec(lam, mu)


@lru_cache(maxsize=None)
def _f_rec(lam: StrictPartition, mu: StrictPartition) -> int:
    if lam == mu:
        return 1
    return sum(_f_rec(lam, nu) for nu in covers_within(mu, lam))


def f_classical(lam: PartitionLike) -> int:
    lam = as_partition(lam)
    values = set()
    for kind in Kind:
        value = Fraction(factorial(lam.size), prod(hook_lengths(lam, kind).values()))
        if value.denominator != 1:
            raise ArithmeticError(f"non-integral count {value} for {lam}")
        values.add(value.numerator)
    if len(values) != 1:
        raise ArithmeticError(f"type B and D hook products disagree for {lam}")
    return values.pop()


def f_straight(parts: Iterable[int]) -> int:
    """Ordinary (unshifted) hook-length formula for a weakly decreasing partition."""
    parts = [p for p in parts if p > 0]
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {parts}")
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0] if parts else 0)]
    hooks = prod(parts[i] - j + conj[j] - i - 1 for i in range(len(parts)) for j in range(parts[i]))
    return factorial(sum(parts)) // hooks


def staircase(n: int) -> StrictPartition:
    return StrictPartition(range(n, 0, -1))


def staircase_complement(lam: PartitionLike) -> list[int]:
    """Row lengths of lam minus the staircase of its length, an unshifted shape."""
    lam = as_partition(lam)
    ell = len(lam)
    return [p - (ell - i) for i, p in enumerate(lam)]


@dataclass(frozen=True)
class CountReport:
    outer: StrictPartition
    inner: StrictPartition
    oracle: int
    naruse_b: int
    naruse_d: int
    recursive: int

    @property
    def agree(self) -> bool:
        return len({self.oracle, self.naruse_b, self.naruse_d, self.recursive}) == 1

    def to_json(self) -> dict:
        return {
            "lambda": list(self.outer),
            "mu": list(self.inner),
            "syt": self.oracle,
            "naruse_B": self.naruse_b,
            "naruse_D": self.naruse_d,
            "recursive": self.recursive,
            "agree": self.agree,
        }


def count_all(lam: PartitionLike, mu: PartitionLike = ()) -> CountReport:
    lam, mu = as_partition(lam), as_partition(mu)
    return CountReport(
        lam, mu,
        sum(1 for _ in iter_syt(lam, mu)),
        f_naruse(lam, mu, Kind.B),
        f_naruse(lam, mu, Kind.D),
        f_recursive(lam, mu),
    )
