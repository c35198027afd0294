"""Sparse polynomials with exact integer coefficients, and the polynomial identities
built from excited diagrams: the linear-factor recursion, its weighted form and
the z-weighted hook-length sums.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .counting import enumerate_syt
from .excited import enumerate_excited
from .shapes import (
    Cell,
    Kind,
    PartitionLike,
    StrictPartition,
    as_partition,
    col_len,
    contains,
    covers_within,
    diagram,
    hook_cells,
    w_set,
    x_var,
)

Monomial = tuple[tuple[int, int], ...]  # sorted (index, exponent) pairs
FAMILIES = ("x", "z")
Number = Union[int, Fraction]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for i, e in b:
        exps[i] = exps.get(i, 0) + e
    return tuple(sorted(exps.items()))


class Poly:
    """Immutable sparse polynomial in one family of indexed variables."""

    __slots__ = ("family", "terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None, family: str = "x"):
        if family not in FAMILIES:
            raise ValueError(f"unknown variable family {family!r}")
        self.family = family
        clean = {}
        for m, c in (terms or {}).items():
            if c:
                if any(e <= 0 for _, e in m):
                    raise ValueError(f"bad exponent in monomial {m}")
                clean[m] = int(c)
        self.terms: dict[Monomial, int] = clean
        self._hash = None

    @classmethod
    def const(cls, c: int, family: str = "x") -> "Poly":
        return cls({(): c}, family)

    @classmethod
    def var(cls, i: int, family: str = "x") -> "Poly":
        if i < 0:
            raise ValueError("variable index must be non-negative")
        return cls({((i, 1),): 1}, family)

    @classmethod
    def linear(cls, coeffs: Mapping[int, int], family: str = "x") -> "Poly":
        return cls({((i, 1),): c for i, c in coeffs.items()}, family)

    def _coerce(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, Poly):
            if other.family != self.family and not (other.is_constant() or self.is_constant()):
                raise ValueError("cannot mix x and z polynomials")
            return other
        if isinstance(other, int):
            return Poly.const(other, self.family)
        return NotImplemented

    def _result_family(self, other: "Poly") -> str:
        if self.is_constant():
            return other.family
        return self.family

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out, self._result_family(other))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()}, self.family)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out, self._result_family(other))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out, base = Poly.const(1, self.family), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Poly.const(other, self.family)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.terms != other.terms:
            return False
        return self.family == other.family or self.is_constant()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.family, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    @property
    def mass(self) -> int:
        """Sum of coefficients, i.e. the value at all variables equal to 1."""
        return sum(self.terms.values())

    @property
    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def indices(self) -> set[int]:
        return {i for m in self.terms for i, _ in m}

    def ordered_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in graded lexicographic order, largest first."""
        top = max(self.indices(), default=-1)

        def key(item):
            m = dict(item[0])
            vec = [m.get(i, 0) for i in range(top + 1)]
            return (-sum(vec), [-e for e in vec])

        return sorted(self.terms.items(), key=key)

    def specialize(self, assignment: Mapping[int, Number]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            term = Fraction(c)
            for i, e in m:
                if i not in assignment:
                    raise ValueError(f"no value given for {self.family}{i}")
                term *= Fraction(assignment[i]) ** e
            total += term
        return total

    def substitute(self, images: Mapping[int, "Poly"]) -> "Poly":
        """Replace each variable by a polynomial (possibly of the other family)."""
        families = {p.family for p in images.values() if not p.is_constant()}
        family = families.pop() if len(families) == 1 else self.family
        powers: dict[tuple[int, int], Poly] = {}
        out = Poly(family=family)
        for m, c in self.terms.items():
            term = Poly.const(c, family)
            for i, e in m:
                if i not in images:
                    raise ValueError(f"no image given for {self.family}{i}")
                if (i, e) not in powers:
                    powers[(i, e)] = images[i] ** e
                term = term * powers[(i, e)]
            out = out + term
        return out

    def to_json(self) -> list[dict]:
        return [
            {"m": {str(i): e for i, e in m}, "c": str(c)}
            for m, c in self.ordered_terms()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping], family: str = "x") -> "Poly":
        terms: dict[Monomial, int] = {}
        for t in data:
            m = tuple(sorted((int(i), int(e)) for i, e in t["m"].items()))
            terms[m] = terms.get(m, 0) + int(t["c"])
        return cls(terms, family)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.ordered_terms():
            body = "*".join(f"{self.family}{i}" + (f"^{e}" if e > 1 else "") for i, e in m)
            if not body:
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}*{body}"
            parts.append(("- " if c < 0 else "+ ") + s)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"Poly({self})"


def format_linear(p: Poly) -> str:
    """A linear form written compactly, like ``2z0+z1``."""
    if p.degree > 1:
        raise ValueError("not a linear polynomial")
    out = ""
    for m, c in sorted(p.terms.items(), key=lambda t: t[0]):
        name = f"{p.family}{m[0][0]}" if m else ""
        mag = abs(c)
        piece = name if name and mag == 1 else f"{mag}{name}"
        out += ("-" if c < 0 else ("+" if out else "")) + piece
    return out or "0"


def _factor_string(factors: list[Poly]) -> str:
    out = ""
    for f in factors:
        s = format_linear(f)
        out += s if len(f.terms) == 1 and s[0].isalpha() else f"({s})"
    return out or "1"


# excited-diagram products ---------------------------------------------------

def cell_factor(u: Cell, kind: Kind) -> Poly:
    i, j = u
    if kind is Kind.B and i == j:
        return Poly.var(i)
    return Poly.linear({i: 1, j: 1} if i != j else {i: 2})


def diagram_factors(cells: Iterable[Cell], kind: Kind | str) -> list[Poly]:
    kind = Kind.parse(kind)
    return [cell_factor(u, kind) for u in sorted(cells)]


def _product(factors: Iterable[Poly]) -> Poly:
    out = Poly.const(1)
    for f in factors:
        out = out * f
    return out


@lru_cache(maxsize=None)
def _enumerator(lam: StrictPartition, mu: StrictPartition, kind: Kind) -> Poly:
    out = Poly()
    for d in enumerate_excited(lam, mu, kind):
        out = out + _product(diagram_factors(d.cells, kind))
    return out


def excited_enumerator(lam: PartitionLike, mu: PartitionLike, kind: Kind | str) -> Poly:
    """Sum over excited diagrams of lam/mu of the product of their cell factors."""
    return _enumerator(as_partition(lam), as_partition(mu), Kind.parse(kind))


def excited_enumerator_text(lam: PartitionLike, mu: PartitionLike, kind: Kind | str) -> str:
    """The same sum, unexpanded, e.g. ``x1(x1+x2) + x1(x2+x3)``."""
    kind = Kind.parse(kind)
    terms = [_factor_string(diagram_factors(d.cells, kind))
             for d in enumerate_excited(lam, mu, kind)]
    return " + ".join(terms) if terms else "0"


def w_sum(mu: PartitionLike, lam: PartitionLike, kind: Kind | str) -> Poly:
    return Poly.linear({k: 1 for k in w_set(mu, lam, kind)})


def theorem1_lhs(lam: PartitionLike, mu: PartitionLike, kind: Kind | str) -> Poly:
    return w_sum(mu, lam, kind) * excited_enumerator(lam, mu, kind)


def theorem1_rhs(lam: PartitionLike, mu: PartitionLike, kind: Kind | str) -> Poly:
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        return Poly()
    out = Poly()
    for nu in covers_within(mu, lam):
        out = out + excited_enumerator(lam, nu, kind)
    return out


def verify_theorem1(lam: PartitionLike, mu: PartitionLike, kind: Kind | str) -> bool:
    return theorem1_lhs(lam, mu, kind) == theorem1_rhs(lam, mu, kind)


def x_assignment(lam: PartitionLike, kind: Kind | str, upto: int) -> dict[int, int]:
    return {i: x_var(lam, kind, i) for i in range(1, upto + 1)}


# weighted hooks ------------------------------------------------------------

def cell_content(u: Cell) -> int:
    return u[1] - u[0]


def weighted_hook(lam: PartitionLike, kind: Kind | str, u: Cell) -> Poly:
    coeffs: dict[int, int] = {}
    for c in hook_cells(lam, kind, u):
        coeffs[cell_content(c)] = coeffs.get(cell_content(c), 0) + 1
    return Poly.linear(coeffs, "z")


def _z_run(lo: int, hi: int, sign: int = 1) -> Poly:
    return Poly.linear({c: sign for c in range(lo, hi + 1)}, "z")


def x_var_z(lam: PartitionLike, kind: Kind | str, i: int) -> Poly:
    """Linear z-form whose all-ones value is the integer x-variable."""
    lam, kind = as_partition(lam), Kind.parse(kind)
    if i < 1:
        raise ValueError("index must be positive")
    if kind is Kind.B:
        if i <= len(lam):
            return _z_run(0, lam[i - 1] - 1)
        return _z_run(0, i - col_len(lam, i) - 1, -1)
    if i <= len(lam):
        return _z_run(1, lam[i - 1])
    # type D contents start at 1, and x_i reads column i-1
    return _z_run(1, i - 1 - col_len(lam, i - 1), -1)


@lru_cache(maxsize=None)
def _weighted_sum(lam: StrictPartition, mu: StrictPartition, kind: Kind) -> Poly:
    out = Poly(family="z")
    for d in enumerate_excited(lam, mu, kind):
        term = Poly.const(1, "z")
        for u in d.cells:
            term = term * weighted_hook(lam, kind, u)
        out = out + term
    return out


def weighted_excited_sum(lam: PartitionLike, mu: PartitionLike, kind: Kind | str) -> Poly:
    """Sum over excited diagrams D of the product of weighted hooks over D."""
    return _weighted_sum(as_partition(lam), as_partition(mu), Kind.parse(kind))


def skew_content_sum(lam: PartitionLike, mu: PartitionLike, kind: Kind | str) -> Poly:
    kind = Kind.parse(kind)
    coeffs: dict[int, int] = {}
    for u in diagram(lam, kind) - diagram(mu, kind):
        coeffs[cell_content(u)] = coeffs.get(cell_content(u), 0) + 1
    return Poly.linear(coeffs, "z")


def verify_w_sum_weighted(mu: PartitionLike, lam: PartitionLike, kind: Kind | str) -> bool:
    rhs = Poly(family="z")
    for k in w_set(mu, lam, kind):
        rhs = rhs + x_var_z(lam, kind, k)
    return skew_content_sum(lam, mu, kind) == rhs


def verify_weighted_recursion(lam: PartitionLike, mu: PartitionLike, kind: Kind | str) -> bool:
    lam, mu, kind = as_partition(lam), as_partition(mu), Kind.parse(kind)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    lhs = skew_content_sum(lam, mu, kind) * weighted_excited_sum(lam, mu, kind)
    rhs = Poly(family="z")
    for nu in covers_within(mu, lam):
        rhs = rhs + weighted_excited_sum(lam, nu, kind)
    return lhs == rhs and verify_w_sum_weighted(mu, lam, kind)


def _z_value(assignment: Mapping[int, Number], c: int) -> Fraction:
    if c not in assignment:
        raise ValueError(f"no value given for z{c}")
    return Fraction(assignment[c])


def syt_weight(tableau: Mapping[Cell, int], kind: Kind | str, assignment: Mapping[int, Number]) -> Fraction:
    """The z-weight of one standard tableau (cells given in type-B coordinates)."""
    shift = Kind.parse(kind).offset
    by_entry = sorted(tableau.items(), key=lambda t: -t[1])
    total, out = Fraction(0), Fraction(1)
    for u, _ in by_entry:
        total += _z_value(assignment, cell_content(u) + shift)
        if total == 0:
            raise ZeroDivisionError("z-assignment makes a denominator vanish")
        out /= total
    return out


def theorem_z_sides(lam: PartitionLike, mu: PartitionLike, kind: Kind | str,
                    assignment: Mapping[int, Number]) -> tuple[Fraction, Fraction]:
    lam, mu, kind = as_partition(lam), as_partition(mu), Kind.parse(kind)
    left = sum((syt_weight(t.entries, kind, assignment) for t in enumerate_syt(lam, mu)), Fraction(0))
    hooks: dict[Cell, Fraction] = {}
    for u in diagram(lam, kind):
        h = weighted_hook(lam, kind, u).specialize(assignment)
        if h == 0:
            raise ZeroDivisionError(f"weighted hook of {u} vanishes")
        hooks[u] = h
    right = Fraction(0)
    full = diagram(lam, kind)
    for d in enumerate_excited(lam, mu, kind):
        term = Fraction(1)
        for u in full - d.cells:
            term /= hooks[u]
        right += term
    return left, right


def verify_theorem_z(lam: PartitionLike, mu: PartitionLike, kind: Kind | str,
                     assignment: Mapping[int, Number]) -> bool:
    if any(Fraction(v) <= 0 for v in assignment.values()):
        raise ValueError("z-assignment must be positive")
    left, right = theorem_z_sides(lam, mu, kind, assignment)
    return left == right


def z_range(lam: PartitionLike) -> range:
    """Content indices that can occur for lam in either type."""
    lam = as_partition(lam)
    return range(0, lam.part(1) + 2)
