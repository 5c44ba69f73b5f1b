"""Finite Q-structures and their phase semantics.

A Q-structure is a finite carrier ``{0, ..., size-1}`` with a binary
operation (the ``dot`` table), a garbage subset and a two-sided unit.
Subsets of the carrier are handled internally as integer bitmasks; the
public functions accept and return ``frozenset`` objects, and facts are
wrapped in :class:`Fact`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

ElementSet = frozenset


class StructureError(ValueError):
    """Malformed table dimensions or out-of-range element indices."""


class MixedStructureError(ValueError):
    """Facts from different structures were combined."""


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def members_of(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class Violation:
    condition: str  # "unit", "symmetry" or "reversal"
    witness: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.condition} violated at {self.witness}"


@dataclass(frozen=True, eq=False)
class QStructure:
    size: int
    unit: int
    dot: tuple[tuple[int, ...], ...]
    garbage: frozenset
    labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        if not isinstance(self.size, int) or self.size < 1:
            raise StructureError(f"size must be a positive integer, got {self.size!r}")
        n = self.size
        dot = tuple(tuple(int(v) for v in row) for row in self.dot)
        if len(dot) != n or any(len(row) != n for row in dot):
            raise StructureError(f"dot table must be {n}x{n}")
        for x, row in enumerate(dot):
            for y, v in enumerate(row):
                if not 0 <= v < n:
                    raise StructureError(f"dot[{x}][{y}] = {v} out of range")
        if not 0 <= self.unit < n:
            raise StructureError(f"unit {self.unit} out of range")
        garbage = frozenset(int(z) for z in self.garbage)
        if any(not 0 <= z < n for z in garbage):
            raise StructureError(f"garbage {sorted(garbage)} has out-of-range entries")
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != n:
                raise StructureError(f"expected {n} labels, got {len(labels)}")
            if len(set(labels)) != n:
                raise StructureError("labels must be distinct")
            object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "dot", dot)
        object.__setattr__(self, "garbage", garbage)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QStructure):
            return NotImplemented
        return (self.size, self.unit, self.dot, self.garbage) == (
            other.size, other.unit, other.dot, other.garbage)

    def __hash__(self) -> int:
        return hash((self.size, self.unit, self.dot, self.garbage))

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def index(self, name: str | int) -> int:
        """Element index from a label or a plain integer."""
        if isinstance(name, int):
            if not 0 <= name < self.size:
                raise StructureError(f"element {name} out of range")
            return name
        if self.labels and name in self.labels:
            return self.labels.index(name)
        if str(name).isdigit() and int(name) < self.size:
            return int(name)
        raise StructureError(f"unknown element {name!r}")

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    @cached_property
    def garbage_mask(self) -> int:
        return mask_of(self.garbage)

    @cached_property
    def perp(self) -> tuple[int, ...]:
        # perp[a] = {b : b.a in Z}, the orthogonal of the singleton {a}
        gm = self.garbage_mask
        return tuple(
            sum(1 << b for b in range(self.size) if gm >> self.dot[b][a] & 1)
            for a in range(self.size))

    def orth_mask(self, mask: int) -> int:
        out = self.full_mask
        for a in _bits(mask):
            out &= self.perp[a]
        return out

    def biorth_mask(self, mask: int) -> int:
        return self.orth_mask(self.orth_mask(mask))

    def dot_mask(self, a: int, b: int) -> int:
        out = 0
        ys = list(_bits(b))
        for x in _bits(a):
            row = self.dot[x]
            for y in ys:
                out |= 1 << row[y]
        return out

    def in_garbage(self, x: int) -> bool:
        return x in self.garbage

    @cached_property
    def facts(self) -> tuple["Fact", ...]:
        return tuple(Fact(self, m) for m in _fact_masks(self))


def _check_set(q: QStructure, a: Iterable[int]) -> int:
    m = mask_of(a)
    if m >> q.size:
        raise StructureError(f"set {sorted(members_of(m))} is not within the carrier")
    return m


def validate(q: QStructure) -> list[Violation]:
    """Every violation of unit neutrality, symmetry and reversal, in scan order."""
    n, d, g = q.size, q.dot, q.garbage
    report = []
    for x in range(n):
        if d[q.unit][x] != x or d[x][q.unit] != x:
            report.append(Violation("unit", (x,)))
    for x, y in product(range(n), repeat=2):
        if x < y and (d[x][y] in g) != (d[y][x] in g):
            report.append(Violation("symmetry", (x, y)))
    for x, y, z in product(range(n), repeat=3):
        if (d[d[x][y]][z] in g) != (d[x][d[z][y]] in g):
            report.append(Violation("reversal", (x, y, z)))
    return report


def is_valid_structure(q: QStructure) -> bool:
    return not validate(q)


def garbage_products_report(q: QStructure) -> frozenset:
    """Garbage elements that are not of the form x.y with x orthogonal to y.

    Informational only; an empty result means Z = {x.y | x perp y} holds.
    Since z = 1.z and 1 is orthogonal to every z in Z, the result is in
    fact always empty.
    """
    products = {q.dot[x][y] for x, y in product(range(q.size), repeat=2)
                if q.dot[x][y] in q.garbage}
    return q.garbage - products


def orth(q: QStructure, a: Iterable[int]) -> frozenset:
    return members_of(q.orth_mask(_check_set(q, a)))


def biorth(q: QStructure, a: Iterable[int]) -> frozenset:
    return members_of(q.biorth_mask(_check_set(q, a)))


def is_fact(q: QStructure, a: Iterable[int]) -> bool:
    m = _check_set(q, a)
    return q.biorth_mask(m) == m


def dot_set(q: QStructure, a: Iterable[int], b: Iterable[int]) -> frozenset:
    return members_of(q.dot_mask(_check_set(q, a), _check_set(q, b)))


def _fact_masks(q: QStructure) -> list[int]:
    # Every fact is an intersection of principal orthogonals {x}^perp;
    # the empty intersection is the whole carrier.
    closed = {q.full_mask}
    for p in sorted(set(q.perp)):
        closed |= {f & p for f in closed}
    return sorted(closed)


def brute_force_fact_masks(q: QStructure) -> list[int]:
    """Scan all 2^n subsets; test oracle for :func:`all_facts`."""
    if q.size > 12:
        raise ValueError("brute-force fact scan limited to 12 elements")
    found = [m for m in range(1 << q.size) if q.biorth_mask(m) == m]
    return found


@dataclass(frozen=True, eq=False)
class Fact:
    """A biorthogonally closed subset of a structure's carrier."""

    q: QStructure
    mask: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fact):
            return NotImplemented
        return self.mask == other.mask and (self.q is other.q or self.q == other.q)

    def __hash__(self) -> int:
        return hash(self.mask)

    @property
    def members(self) -> frozenset:
        return members_of(self.mask)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __le__(self, other: "Fact") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Fact") -> bool:
        return self <= other and self.mask != other.mask

    def __ge__(self, other: "Fact") -> bool:
        return other <= self

    def unit_in(self) -> bool:
        return bool(self.mask >> self.q.unit & 1)

    def __repr__(self) -> str:
        return "{" + ", ".join(self.q.label(x) for x in self) + "}"


def make_fact(q: QStructure, members: Iterable[int | str]) -> Fact:
    """Wrap a subset as a Fact, raising ValueError if it is not closed."""
    m = _check_set(q, (q.index(x) for x in members))
    if q.biorth_mask(m) != m:
        raise ValueError(f"{sorted(members_of(m))} is not a fact")
    return Fact(q, m)


def all_facts(q: QStructure) -> list[Fact]:
    """All facts sorted by bit pattern; the first is always the least fact 0."""
    return list(q.facts)


def _same(f: Fact, g: Fact) -> QStructure:
    if not (f.q is g.q or f.q == g.q):
        raise MixedStructureError("facts belong to different structures")
    return f.q


def neg(f: Fact) -> Fact:
    return Fact(f.q, f.q.orth_mask(f.mask))


def tensor(f: Fact, g: Fact) -> Fact:
    q = _same(f, g)
    return Fact(q, q.biorth_mask(q.dot_mask(f.mask, g.mask)))


def par(f: Fact, g: Fact) -> Fact:
    q = _same(f, g)
    return Fact(q, q.orth_mask(q.dot_mask(q.orth_mask(f.mask), q.orth_mask(g.mask))))


def limp(f: Fact, g: Fact) -> Fact:
    q = _same(f, g)
    return Fact(q, q.orth_mask(q.dot_mask(f.mask, q.orth_mask(g.mask))))


def with_(f: Fact, g: Fact) -> Fact:
    q = _same(f, g)
    return Fact(q, f.mask & g.mask)


def plus(f: Fact, g: Fact) -> Fact:
    q = _same(f, g)
    return Fact(q, q.biorth_mask(f.mask | g.mask))


def one_fact(q: QStructure) -> Fact:
    return Fact(q, q.orth_mask(q.garbage_mask))


def zero_fact(q: QStructure) -> Fact:
    return Fact(q, q.orth_mask(q.full_mask))


def top_fact(q: QStructure) -> Fact:
    return Fact(q, q.full_mask)


def z_fact(q: QStructure) -> Fact:
    return Fact(q, q.orth_mask(1 << q.unit))


def is_valid_fact(f: Fact) -> bool:
    q = f.q
    by_unit = f.unit_in()
    by_one = q.orth_mask(q.garbage_mask) & ~f.mask == 0
    by_orth = q.orth_mask(f.mask) & ~q.garbage_mask == 0
    assert by_unit == by_one == by_orth, "validity characterizations disagree"
    return by_unit


def is_projective(q: QStructure) -> bool:
    """True iff the garbage set absorbs on the left: z.y in Z for z in Z."""
    g = q.garbage
    return all(q.dot[z][y] in g for z in g for y in range(q.size))


def fold(op, facts: Sequence[Fact]) -> Fact:
    """Left-associated fold of a binary connective."""
    it = iter(facts)
    acc = next(it)
    for f in it:
        acc = op(acc, f)
    return acc
