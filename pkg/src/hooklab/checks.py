"""Exhaustive property suites for the bump engine.

Run standalone with ``python3 -m hooklab.checks [max_size]``.
"""
from __future__ import annotations

import sys
import time
from collections import Counter
from dataclasses import dataclass, field

from .bicolored import enumerate_bicolored, weight
from .bump import SENTINEL, Dir, _bump, _Grid, inverse_insert, potential, verify_sieve
from .shapes import Kind, strict_partitions_upto, subpartitions, w_universe

PROPERTIES = ("direction", "entries", "potential", "potential_bound", "valid", "weight", "round_trip")


@dataclass
class PropertyReport:
    cases: int = 0
    steps: int = 0
    failures: Counter = field(default_factory=Counter)
    examples: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, prop: str, example) -> None:
        self.failures[prop] += 1
        self.examples.setdefault(prop, example)

    def summary(self) -> str:
        bad = ", ".join(f"{p}={self.failures[p]}" for p in PROPERTIES if self.failures[p])
        return f"{self.cases} insertions, {self.steps} bumps, " + (f"failures: {bad}" if bad else "no failures")


def _direction_ok(kind: Kind, d: Dir, old, new, diagonal_start: bool) -> bool:
    (i, j), (a, b) = old, new
    if d is Dir.RIGHT:
        if b != j + 1:
            return False
        # out of a type-D diagonal cell the next free diagonal is one row lower
        return a <= i or (kind is Kind.D and diagonal_start and a == i + 1 and b == a + 1)
    return old == SENTINEL or (a == i + 1 and b <= j)


def check_insertions(max_size: int = 8, kinds=tuple(Kind)) -> PropertyReport:
    rep = PropertyReport()
    for lam in strict_partitions_upto(max_size):
        for mu in subpartitions(lam):
            for kind in kinds:
                for t in enumerate_bicolored(mu, lam, kind):
                    top = max((v for row in t.rows for v, _ in row), default=0)
                    base = len(mu) + mu.part(1)
                    for k in sorted(w_universe(lam)):
                        _check_one(rep, t, k, mu, kind, base + max(top, k) + 2)
    return rep


def _check_one(rep: PropertyReport, t, k: int, mu, kind: Kind, bound: int) -> None:
    rep.cases += 1
    g = _Grid(t)
    cell, d, kk = SENTINEL, Dir.DOWN, k
    pot = potential(cell, d, kk)
    while d is not Dir.STOP:
        prev = dict(g.cells)
        diagonal_start = cell != SENTINEL and g.is_diag(*cell)
        ncell, nd, nk = _bump(g, cell, d, kk)
        rep.steps += 1
        if not _direction_ok(kind, d, cell, ncell, diagonal_start):
            rep.fail("direction", (str(t), k, cell, ncell))
        old = prev.get(ncell)
        if old is not None and g.cells[ncell][0] > old[0]:
            rep.fail("entries", (str(t), k, ncell))
        npot = potential(ncell, nd, nk)
        if npot <= pot:
            rep.fail("potential", (str(t), k, cell, ncell))
        if nd is not Dir.STOP and npot > bound:
            rep.fail("potential_bound", (str(t), k, npot, bound))
        cell, d, kk, pot = ncell, nd, nk, npot
    out = g.freeze()
    if not out.is_valid():
        rep.fail("valid", (str(t), k, str(out)))
    w = weight(t)
    w[k] += 1
    if weight(out) != w:
        rep.fail("weight", (str(t), k, str(out)))
    if inverse_insert(out, mu) != (t, k):
        rep.fail("round_trip", (str(t), k, str(out)))


def check_sieve(max_size: int = 7, kinds=tuple(Kind)) -> tuple[int, list]:
    """Run the sieve verification on every pair; return (pairs checked, failures)."""
    n, bad = 0, []
    for lam in strict_partitions_upto(max_size):
        for mu in subpartitions(lam):
            for kind in kinds:
                n += 1
                try:
                    verify_sieve(mu, lam, kind)
                except AssertionError as exc:
                    bad.append((lam, mu, kind.value, str(exc)))
    return n, bad


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    size = int(argv[0]) if argv else 8
    start = time.perf_counter()
    rep = check_insertions(size)
    print(f"bump properties up to |lambda| = {size}: {rep.summary()} "
          f"({time.perf_counter() - start:.1f}s)")
    start = time.perf_counter()
    n, bad = check_sieve(min(size, 7))
    print(f"sieve up to |lambda| = {min(size, 7)}: {n} pairs, {len(bad)} failures "
          f"({time.perf_counter() - start:.1f}s)")
    return 0 if rep.ok and not bad else 1


if __name__ == "__main__":
    sys.exit(main())
