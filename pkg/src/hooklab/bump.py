"""Bumps, insertion, repeated insertion and their verification harnesses.

The engine works on a mutable grid ``{(i, j): (value, is_red)}`` and exposes
immutable :class:`BicoloredTableau` values at its boundary.  Outside the
shape the grid is read as a virtual plane: 0 above row 1 and left of the
shifted boundary, infinity everywhere else.
"""
from __future__ import annotations

import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional

from .bicolored import BLACK, RED, BicoloredTableau, Entry, enumerate_bicolored, is_member, weight
from .shapes import (
    Cell,
    Kind,
    PartitionLike,
    StrictPartition,
    as_partition,
    added_cell,
    covers,
    covers_within,
    w_set,
    w_universe,
)

INF = math.inf
SENTINEL: Cell = (0, 0)


class Dir(str, Enum):
    RIGHT = "R"
    DOWN = "D"
    STOP = "S"


class BumpError(RuntimeError):
    """A bump found no admissible position; impossible for valid input."""


class VerificationError(AssertionError):
    def __init__(self, message: str, counterexample: object = None):
        super().__init__(message)
        self.counterexample = counterexample


@dataclass(frozen=True)
class BumpState:
    tableau: BicoloredTableau
    cell: Cell
    dir: Dir
    k: float  # int variable index, INF once stopped

    def __post_init__(self) -> None:
        if (self.dir is Dir.STOP) != (self.k == INF):
            raise ValueError("direction is stop exactly when k is infinite")
        if self.cell == SENTINEL and self.dir is not Dir.DOWN:
            raise ValueError("the sentinel cell always moves down")


@dataclass(frozen=True)
class Step:
    cell: Cell
    dir: Dir
    k: float
    potential: float

    def format(self) -> str:
        k = "inf" if self.k == INF else str(self.k)
        pot = "inf" if self.potential == INF else str(self.potential)
        return f"step cell=({self.cell[0]},{self.cell[1]}) dir={self.dir.value} k={k} pot={pot}"

    def to_json(self) -> dict:
        return {
            "cell": list(self.cell),
            "dir": self.dir.value,
            "k": None if self.k == INF else self.k,
            "pot": None if self.potential == INF else self.potential,
        }


@dataclass
class InsertionTrace:
    """Step log of one insertion or of a whole repeated insertion."""

    steps: list[Step] = field(default_factory=list)
    insertions: int = 0
    boundaries: list[int] = field(default_factory=list)  # index into steps where each insertion starts
    tableaux: Optional[list[BicoloredTableau]] = None  # filled in debug mode only

    def per_insertion(self) -> list[list[Step]]:
        ends = self.boundaries[1:] + [len(self.steps)]
        return [self.steps[a:b] for a, b in zip(self.boundaries, ends)]

    def lines(self) -> list[str]:
        out = []
        for n, chunk in enumerate(self.per_insertion(), start=1):
            out.append(f"insertion {n}")
            out.extend(s.format() for s in chunk)
        return out

    def to_json(self) -> dict:
        return {
            "insertions": self.insertions,
            "steps": [[s.to_json() for s in chunk] for chunk in self.per_insertion()],
        }


def potential(cell: Cell, d: Dir, k: float) -> float:
    if d is Dir.STOP:
        return INF
    return k + (cell[1] if d is Dir.RIGHT else cell[0])


class _Grid:
    __slots__ = ("kind", "off", "cells", "lengths")

    def __init__(self, t: BicoloredTableau):
        self.kind = t.kind
        self.off = t.kind.offset
        self.cells: dict[Cell, Entry] = dict(t.items())
        self.lengths = [len(r) for r in t.rows]

    def copy(self) -> "_Grid":
        g = _Grid.__new__(_Grid)
        g.kind, g.off = self.kind, self.off
        g.cells, g.lengths = dict(self.cells), list(self.lengths)
        return g

    def freeze(self) -> BicoloredTableau:
        rows = []
        for i, n in enumerate(self.lengths, start=1):
            start = i + self.off
            rows.append(tuple(self.cells[(i, j)] for j in range(start, start + n)))
        return BicoloredTableau(self.kind, tuple(rows))

    def value(self, a: int, b: int) -> float:
        if a <= 0 or b < a + self.off:
            return 0
        e = self.cells.get((a, b))
        return INF if e is None else e[0]

    def variable(self, cell: Cell) -> int:
        v, red = self.cells[cell]
        return v + (cell[1] if red else cell[0])

    def is_diag(self, i: int, j: int) -> bool:
        return j == i + self.off

    def diag_entry(self, i: int, k: int) -> Entry:
        """How variable k is written on the diagonal of row i."""
        if self.kind is Kind.B:
            return (k - i, BLACK)
        return (k - i, BLACK) if (k - i) % 2 == 0 else (k - i - 1, RED)

    def place(self, cell: Cell, entry: Entry) -> Optional[Entry]:
        """Write entry at cell, growing the shape if needed; return the displaced entry."""
        old = self.cells.get(cell)
        if old is None:
            i, j = cell
            if i == len(self.lengths) + 1 and self.is_diag(i, j):
                self.lengths.append(0)
            if i > len(self.lengths) or j != i + self.off + self.lengths[i - 1]:
                raise BumpError(f"cannot add cell {cell} to shape {self.lengths}")
            self.lengths[i - 1] += 1
        self.cells[cell] = entry
        return old

    def removable(self, cell: Cell) -> bool:
        i, j = cell
        if not 1 <= i <= len(self.lengths) or j != i + self.off + self.lengths[i - 1] - 1:
            return False
        return i == len(self.lengths) or self.lengths[i - 1] - 1 > self.lengths[i]

    def remove(self, cell: Cell) -> Entry:
        if not self.removable(cell):
            raise BumpError(f"cannot remove {cell} from shape {self.lengths}")
        i = cell[0]
        self.lengths[i - 1] -= 1
        if self.lengths[i - 1] == 0:
            self.lengths.pop()
        return self.cells.pop(cell)


def _bump(g: _Grid, cell: Cell, d: Dir, k: int) -> tuple[Cell, Dir, float]:
    """One bump, mutating g. Returns the new (cell, direction, k)."""
    i, j = cell
    if d is Dir.RIGHT:
        jn = j + 1
        target = None
        for ic in range(jn - g.off, 0, -1):
            if g.is_diag(ic, jn):
                if g.kind is Kind.B:
                    continue
                entry = g.diag_entry(ic, k)
                # nothing lies below a type-D diagonal cell in its column
                upper = INF
            else:
                entry = (k - ic, BLACK)
                upper = g.value(ic + 1, jn)
            if g.value(ic - 1, jn) <= entry[0] <= upper:
                target = (ic, jn)
                break
    elif d is Dir.DOWN:
        ic = i + 1
        row_len = g.lengths[ic - 1] if ic <= len(g.lengths) else 0
        hi = max(ic + g.off + row_len, ic + g.off)
        target = None
        for jc in range(hi, ic + g.off - 1, -1):
            entry = g.diag_entry(ic, k) if g.is_diag(ic, jc) else (k - jc, RED)
            if entry[0] < 0:
                continue
            if g.value(ic, jc - 1) <= entry[0] <= g.value(ic, jc + 1):
                target = (ic, jc)
                break
    else:
        raise ValueError("cannot bump a stopped state")
    if target is None:
        raise BumpError(f"no admissible position for x_{k} moving {d.name} from {cell}")
    old = g.place(target, entry)
    if old is None:
        return target, Dir.STOP, INF
    ti, tj = target
    value, red = old
    if g.is_diag(ti, tj) or not red:
        return target, Dir.RIGHT, value + (tj if red else ti)
    return target, Dir.DOWN, value + tj


def bump(s: BumpState) -> BumpState:
    g = _Grid(s.tableau)
    cell, d, k = _bump(g, s.cell, s.dir, int(s.k))
    return BumpState(g.freeze(), cell, d, k)


def virtual_entry(t: BicoloredTableau, a: int, b: int) -> float:
    return _Grid(t).value(a, b)


def _insert(g: _Grid, k: int, trace: Optional[InsertionTrace] = None) -> Cell:
    cell, d, kk = SENTINEL, Dir.DOWN, k
    if trace is not None:
        trace.boundaries.append(len(trace.steps))
        trace.insertions += 1
        trace.steps.append(Step(cell, d, kk, potential(cell, d, kk)))
    while d is not Dir.STOP:
        cell, d, kk = _bump(g, cell, d, kk)
        if trace is not None:
            trace.steps.append(Step(cell, d, kk, potential(cell, d, kk)))
            if trace.tableaux is not None:
                trace.tableaux.append(g.freeze())
    return cell


def insert(t: BicoloredTableau, k: int, trace: Optional[InsertionTrace] = None) -> BicoloredTableau:
    """Insert variable x_k; the result has exactly one more cell."""
    g = _Grid(t)
    _insert(g, k, trace)
    return g.freeze()


def insert_with_cell(t: BicoloredTableau, k: int) -> tuple[BicoloredTableau, Cell]:
    g = _Grid(t)
    cell = _insert(g, k)
    return g.freeze(), cell


def _restore(g: _Grid, cell: Cell, d: Dir, k: float) -> bool:
    """Undo the write at cell: put x_k back (or drop the cell when d is STOP)."""
    if d is Dir.STOP:
        if not g.removable(cell):
            return False
        g.remove(cell)
        return True
    i, j = cell
    k = int(k)
    if g.is_diag(i, j):
        if d is not Dir.RIGHT:
            return False
        entry = g.diag_entry(i, k)
    elif d is Dir.RIGHT:
        entry = (k - i, BLACK)
    else:
        entry = (k - j, RED)
    if entry[0] < 0:
        return False
    g.cells[cell] = entry
    return True


def _predecessors(g: _Grid, cell: Cell, d: Dir, k: float) -> list[tuple[_Grid, Cell, Dir, int]]:
    """All states (grid, cell, dir, k) whose bump yields (g, cell, d, k)."""
    arrived = g.variable(cell)
    before = g.copy()
    if not _restore(before, cell, d, k):
        return []
    i, j = cell
    candidates: list[tuple[Cell, Dir]] = []
    if i == 1:
        candidates.append((SENTINEL, Dir.DOWN))
    elif i - 1 <= len(before.lengths):
        start = i - 1 + before.off
        candidates += [((i - 1, c), Dir.DOWN) for c in range(start, start + before.lengths[i - 2])]
    # a right move out of a type-D diagonal cell may step one row down, so try every row
    candidates += [((r, j - 1), Dir.RIGHT) for r in range(1, len(before.lengths) + 1)
                   if (r, j - 1) in before.cells]
    out = []
    for pcell, pdir in candidates:
        trial = before.copy()
        try:
            result = _bump(trial, pcell, pdir, arrived)
        except BumpError:
            continue
        if result == (cell, d, k) and trial.cells == g.cells and trial.lengths == g.lengths:
            out.append((before, pcell, pdir, arrived))
    return out


def _unwind(g: _Grid, cell: Cell, d: Dir, k: float, depth: int = 0) -> list[tuple[BicoloredTableau, int]]:
    if depth > 10_000:
        raise BumpError("inverse bump did not reach the top row")
    out = []
    for before, pcell, pdir, arrived in _predecessors(g, cell, d, k):
        if pcell == SENTINEL:
            t = before.freeze()
            if t.is_valid():
                out.append((t, arrived))
        else:
            out.extend(_unwind(before, pcell, pdir, arrived, depth + 1))
    return out


def inverse_insert(t: BicoloredTableau, mu: Optional[PartitionLike] = None) -> tuple[BicoloredTableau, int]:
    """The unique (S, k) with insert(S, k) == t and S of shape mu.

    Insertions into different shapes can collide, so without mu every corner
    of t is tried and the preimage must be unique among all of them.
    """
    g = _Grid(t)
    if mu is None:
        starts = [(i, i + g.off + n - 1) for i, n in enumerate(g.lengths, start=1)]
    else:
        starts = [added_cell(mu, t.shape, t.kind)]
    found = []
    for cell in starts:
        found.extend(_unwind(g, cell, Dir.STOP, INF))
    if len(found) != 1:
        raise VerificationError(f"{len(found)} preimages for {t}", found)
    return found[0]


def uncovered(t: BicoloredTableau, mu: PartitionLike) -> tuple[BicoloredTableau, Cell, int]:
    """Remove the cell of t outside mu; return the smaller tableau, the cell and its variable."""
    mu = as_partition(mu)
    shape = t.shape
    if not covers(mu, shape):
        raise ValueError(f"shape {shape} does not cover {mu}")
    g = _Grid(t)
    for i in range(1, len(shape) + 1):
        if shape.part(i) != mu.part(i):
            cell = (i, i + g.off + shape.part(i) - 1)
            k = g.variable(cell)
            g.remove(cell)
            return g.freeze(), cell, k
    raise AssertionError("unreachable")


def repeated_insert(
    t: BicoloredTableau,
    k: int,
    lam: PartitionLike,
    trace: Optional[InsertionTrace] = None,
) -> tuple[BicoloredTableau, InsertionTrace]:
    """Insert x_k, re-inserting the spilled variable until the result is bounded by lam.

    For k outside the W-set of (mu, lam) exactly one insertion is performed
    (the sieve setting).
    """
    lam = as_partition(lam)
    mu = t.shape
    if trace is None:
        trace = InsertionTrace()
    single = k not in w_set(mu, lam, t.kind)
    g = _Grid(t)
    while True:
        cell = _insert(g, k, trace)
        if single:
            return g.freeze(), trace
        result = g.freeze()
        if is_member(result, lam):
            return result, trace
        k = g.variable(cell)
        g.remove(cell)


def count_insertions(t: BicoloredTableau, k: int, lam: StrictPartition) -> tuple[BicoloredTableau, int]:
    trace = InsertionTrace()
    out, _ = repeated_insert(t, k, lam, trace)
    return out, trace.insertions


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("HOOKLAB_THREADS", "1")))
    except ValueError:
        return 1


def _run_chunk(args: tuple[list[BicoloredTableau], list[int], StrictPartition]) -> list[tuple[BicoloredTableau, int]]:
    tabs, ks, lam = args
    return [count_insertions(t, k, lam) for t in tabs for k in ks]


@dataclass
class BijectionReport:
    domain_size: int
    image_size: int
    codomain_size: int
    injective: bool
    onto: bool
    weight_preserving: bool
    histogram: dict[int, int]
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.injective and self.onto and self.weight_preserving

    def histogram_tuple(self) -> tuple[int, ...]:
        top = max(self.histogram, default=0)
        return tuple(self.histogram.get(n, 0) for n in range(1, top + 1))

    def to_json(self) -> dict:
        return {
            "domain_size": self.domain_size,
            "image_size": self.image_size,
            "codomain_size": self.codomain_size,
            "injective": self.injective,
            "onto": self.onto,
            "weight_preserving": self.weight_preserving,
            "histogram": list(self.histogram_tuple()),
            "ok": self.ok,
        }


def verify_bijection(mu: PartitionLike, lam: PartitionLike, kind: Kind | str) -> BijectionReport:
    mu, lam, kind = as_partition(mu), as_partition(lam), Kind.parse(kind)
    domain = enumerate_bicolored(mu, lam, kind)
    ks = sorted(w_set(mu, lam, kind))
    workers = _workers()
    if workers > 1 and len(domain) > 2000:
        size = -(-len(domain) // (4 * workers))
        chunks = [(domain[a:a + size], ks, lam) for a in range(0, len(domain), size)]
        with ProcessPoolExecutor(workers) as pool:
            results = [r for part in pool.map(_run_chunk, chunks) for r in part]
    else:
        results = _run_chunk((domain, ks, lam))

    histogram: Counter = Counter()
    image = set()
    bad_weight, bad_member = [], []
    pairs = ((t, k) for t in domain for k in ks)
    for (t, k), (out, n) in zip(pairs, results):
        histogram[n] += 1
        image.add(out)
        w = weight(t)
        w[k] += 1
        if weight(out) != w:
            bad_weight.append((t, k, out))
        if not (covers(mu, out.shape) and is_member(out, lam)):
            bad_member.append((t, k, out))
    codomain = {s for nu in covers_within(mu, lam) for s in enumerate_bicolored(nu, lam, kind)}
    domain_size = len(domain) * len(ks)
    return BijectionReport(
        domain_size=domain_size,
        image_size=len(image),
        codomain_size=len(codomain),
        injective=len(image) == domain_size,
        onto=image == codomain and not bad_member,
        weight_preserving=not bad_weight,
        histogram=dict(sorted(histogram.items())),
        counterexamples=(bad_weight + bad_member)[:10],
    )


def verify_sieve(mu: PartitionLike, lam: PartitionLike, kind: Kind | str) -> bool:
    """Check that removing the spilled cell is a bijection from psi(A) minus Y onto A minus X."""
    mu, lam, kind = as_partition(mu), as_partition(lam), Kind.parse(kind)
    tabs = enumerate_bicolored(mu, lam, kind)
    wset = w_set(mu, lam, kind)
    a_set = {(t, k) for t in tabs for k in w_universe(lam)}
    x_set = {(t, k) for t in tabs for k in wset}
    images = {insert(t, k) for t, k in a_set}
    if len(images) != len(a_set):
        raise VerificationError("single insertion is not injective on A")
    outside = [s for s in images if not is_member(s, lam)]
    back = [uncovered(s, mu) for s in outside]
    preimages = {(s, k) for s, _, k in back}
    if len(preimages) != len(outside):
        raise VerificationError("restriction of phi is not injective")
    if preimages != a_set - x_set:
        raise VerificationError("image of phi differs from A minus X",
                                sorted(map(str, preimages ^ (a_set - x_set)))[:10])
    return True


# --- worst-case family ------------------------------------------------------


def _mu_m(m: int) -> StrictPartition:
    return StrictPartition((m + 2,) + tuple(range(m, 0, -1)))


def _lambda_m(m: int) -> StrictPartition:
    return StrictPartition((m + 2, m + 1) + tuple(range(m - 1, 0, -1)))


def _odd_positive(q: float) -> bool:
    return q > 0 and q == int(q) and int(q) % 2 == 1


def _s_entry(m: int, n: int, i: int, j: int) -> Entry:
    if i == j:
        return (0, BLACK)
    if i == 1:
        q = (n + 1) / 2 ** (j - 2)
        special = q == int(q) and (int(q) == 2 or (int(q) % 2 == 1 and int(q) >= 3))
        return (0, RED) if n % 2 == 1 and special else (0, BLACK)
    if i == 2:
        return (0, BLACK) if j == 1 + n.bit_length() else (0, RED)
    q = ((n + 2) // 2 ** (i - 2) - 1) / 2 ** (j - i)
    return (0, RED) if _odd_positive(q) else (0, BLACK)


def k_index(n: int) -> int:
    if n % 2:
        return 1
    if (n + 2) & (n + 1) == 0:  # n = 2^j - 2
        return (n + 2).bit_length()
    j = ((n + 2) & -(n + 2)).bit_length() - 1
    return j + 2


def s_family(m: int, n: int) -> tuple[BicoloredTableau, int]:
    """The tableau S^{m,n} of shape (m+2, m, m-1, ..., 1) and its index k_n."""
    if m < 1 or not 0 <= n < 2 ** m:
        raise ValueError(f"need m >= 1 and 0 <= n < 2^m, got m={m}, n={n}")
    mu = _mu_m(m)
    rows = tuple(
        tuple(_s_entry(m, n, i, j) for j in range(i, i + p))
        for i, p in enumerate(mu, start=1)
    )
    return BicoloredTableau(Kind.B, rows), k_index(n)


def family_partitions(m: int) -> tuple[StrictPartition, StrictPartition]:
    """(mu, lam) for the worst-case family."""
    return _mu_m(m), _lambda_m(m)


def verify_complexity(m: int, check_states: bool = True) -> int:
    """Run the worst-case repeated insertion and return its number of insertions."""
    mu, lam = family_partitions(m)
    t, k = s_family(m, 0)
    g = _Grid(t)
    count = 0
    while True:
        cell = _insert(g, k)
        count += 1
        n = count - 1
        if check_states:
            _check_closed_form(m, n, g, cell)
        result = g.freeze()
        if is_member(result, lam):
            break
        k = g.variable(cell)
        g.remove(cell)
        if count > 2 ** m:
            raise VerificationError(f"more than 2^{m} insertions")
    return count


def _check_closed_form(m: int, n: int, g: _Grid, cell: Cell) -> None:
    last = n == 2 ** m - 1
    if n % 2 == 0:
        want_cell, want_entry = (1, m + 3), (0, BLACK)
    else:
        want_cell = (2, m + 2)
        want_entry = (0, BLACK) if last else (k_index(n + 1) - 2, BLACK)
    if cell != want_cell or g.cells[cell] != want_entry:
        raise VerificationError(
            f"m={m}, n={n}: added {g.cells.get(cell)} at {cell}, expected {want_entry} at {want_cell}")
    if last:
        return
    rest = g.copy()
    rest.remove(cell)
    expected, _ = s_family(m, n + 1)
    if rest.freeze() != expected:
        raise VerificationError(f"m={m}, n={n}: intermediate tableau differs from S^(m,n+1)",
                                (rest.freeze(), expected))
