"""Constructors for concrete Q-structures.

The two worked examples (the classical model over a set of variables and
the ray model over a finite set of rational lines), exhaustive enumeration
of tiny structures, and seeded random sampling.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from . import linalg
from .phase import Fact, QStructure, all_facts, is_projective, validate

MAX_CLASSICAL_VARIABLES = 4
MAX_ENUMERATION_SIZE = 4


class ResourceError(ValueError):
    pass


class SamplingError(RuntimeError):
    pass


@dataclass(frozen=True)
class ModelRecipe:
    kind: str  # classical | ray | random | enumerated
    parameters: dict = field(default_factory=dict)

    def build(self) -> QStructure:
        p = self.parameters
        if self.kind == "classical":
            return classical_model(p.get("variables", []))
        if self.kind == "ray":
            return ray_model(p["rays"], p["ambient_dim"])
        if self.kind == "random":
            return random_qstructure(p["size"], p.get("seed", 0),
                                     projective=p.get("projective", False),
                                     allow_unit_garbage=p.get("allow_unit_garbage", False))
        if self.kind == "enumerated":
            return nth_qstructure(p["size"], p["index"])
        raise ValueError(f"unknown recipe kind {self.kind!r}")


def classical_model(variables: Sequence[str]) -> QStructure:
    """Truth assignments plus a unit ``1`` (index 0) and an absorbing ``0`` (last).

    m.m = m, m.m' = 0 for distinct assignments, garbage = {0}.
    """
    variables = list(variables)
    if len(variables) > MAX_CLASSICAL_VARIABLES:
        raise ResourceError(
            f"classical model over {len(variables)} variables has "
            f"{2 ** len(variables) + 2} elements; at most {MAX_CLASSICAL_VARIABLES} variables")
    assignments = list(itertools.product([True, False], repeat=len(variables)))
    labels = ["1"]
    for a in assignments:
        labels.append("{" + ",".join(v for v, t in zip(variables, a) if t) + "}")
    labels.append("0")
    n = len(labels)
    zero = n - 1
    dot = [[zero] * n for _ in range(n)]
    for x in range(n):
        dot[0][x] = dot[x][0] = x
        dot[x][x] = x
    dot[0][zero] = dot[zero][0] = zero
    return QStructure(n, 0, dot, {zero}, labels)


def ray_model(rays: Sequence, ambient_dim: int) -> QStructure:
    """``H`` (unit, index 0), one element per ray, and ``0`` (last).

    x.y = y when the rays are not orthogonal, 0 otherwise.
    """
    vs = [linalg.vec(r) for r in rays]
    for i, v in enumerate(vs):
        if len(v) != ambient_dim:
            raise linalg.DimensionError(f"ray {i} has dimension {len(v)}, expected {ambient_dim}")
        if all(c == 0 for c in v):
            raise ValueError(f"ray {i} is the zero vector")
    for i, j in itertools.combinations(range(len(vs)), 2):
        if linalg.span([vs[i], vs[j]]).rank < 2:
            raise ValueError(f"rays {i} and {j} are collinear")
    k = len(vs)
    n = k + 2
    zero = n - 1
    dot = [[zero] * n for _ in range(n)]
    for x in range(n):
        dot[0][x] = dot[x][0] = x
    dot[0][zero] = dot[zero][0] = zero
    for i, j in itertools.product(range(k), repeat=2):
        if linalg.inner(vs[i], vs[j]) != 0:
            dot[i + 1][j + 1] = j + 1
    labels = ["H"] + [f"r{i}" for i in range(k)] + ["0"]
    return QStructure(n, 0, dot, {zero}, labels)


def is_orthoclosed(rays: Sequence, ambient_dim: int) -> bool:
    """Whether every ray's orthocomplement line (in dimension 2) is in the list.

    Only meaningful for ambient_dim 2; higher dimensions return True.
    """
    if ambient_dim != 2:
        return True
    vs = [linalg.vec(r) for r in rays]
    lines = {linalg.span([v]) for v in vs}
    return all(linalg.ortho_complement(linalg.span([v])) in lines for v in vs)


# -- vectorized axiom checks ------------------------------------------------

def _valid_batch(dot: np.ndarray, gz: np.ndarray) -> np.ndarray:
    """dot: (B, n, n) int tables; gz: (B, n) bool garbage indicator."""
    B, n, _ = dot.shape
    b3 = np.arange(B)[:, None, None]
    inz = gz[b3, dot]
    ok = (inz == inz.transpose(0, 2, 1)).all(axis=(1, 2))
    b4 = np.arange(B)[:, None, None, None]
    zs = np.arange(n)[None, None, None, :]
    xs = np.arange(n)[None, :, None, None]
    lhs = dot[b4, dot[:, :, :, None], zs]                       # (x.y).z
    rhs = dot[b4, xs, dot.transpose(0, 2, 1)[:, None, :, :]]    # x.(z.y)
    ok &= (gz[b4, lhs] == gz[b4, rhs]).all(axis=(1, 2, 3))
    return ok


def _projective_batch(dot: np.ndarray, gz: np.ndarray) -> np.ndarray:
    B = dot.shape[0]
    inz = gz[np.arange(B)[:, None, None], dot]
    return (~gz[:, :, None] | inz).all(axis=(1, 2))


def _tables_with_unit(free: np.ndarray, n: int) -> np.ndarray:
    B = free.shape[0]
    dot = np.empty((B, n, n), dtype=np.int64)
    dot[:, 0, :] = np.arange(n)
    dot[:, :, 0] = np.arange(n)
    dot[:, 1:, 1:] = free.reshape(B, n - 1, n - 1)
    return dot


def _enumerate_masks(n: int) -> Iterator[tuple[int, int]]:
    """(garbage mask, table index) of every valid structure, in order."""
    k = (n - 1) ** 2
    total = n ** k
    digits = n ** np.arange(k - 1, -1, -1)
    chunk = 1 << 16
    for gmask in range(1 << n):
        gz1 = np.array([bool(gmask >> i & 1) for i in range(n)])
        for start in range(0, total, chunk):
            idx = np.arange(start, min(total, start + chunk))
            free = (idx[:, None] // digits[None, :]) % n
            dot = _tables_with_unit(free, n)
            ok = _valid_batch(dot, np.broadcast_to(gz1, (len(idx), n)))
            for i in idx[ok]:
                yield gmask, int(i)


def _structure_from_index(n: int, gmask: int, index: int) -> QStructure:
    k = (n - 1) ** 2
    free = [(index // n ** (k - 1 - j)) % n for j in range(k)]
    dot = _tables_with_unit(np.array([free]), n)[0]
    garbage = {i for i in range(n) if gmask >> i & 1}
    return QStructure(n, 0, dot.tolist(), garbage)


def enumerate_qstructures(n: int) -> Iterator[QStructure]:
    """Every Q-structure on {0..n-1} with unit 0, each once, deterministic order.

    Ordered by garbage bitmask, then by the free table entries read as a
    base-n number. No isomorphism reduction.
    """
    if n < 1:
        raise ValueError("size must be positive")
    if n > MAX_ENUMERATION_SIZE:
        raise ResourceError(
            f"enumeration is limited to size {MAX_ENUMERATION_SIZE}; use random_qstructure")
    if n == 1:
        yield QStructure(1, 0, [[0]], set())
        yield QStructure(1, 0, [[0]], {0})
        return
    for gmask, index in _enumerate_masks(n):
        yield _structure_from_index(n, gmask, index)


_ENUM_CACHE: dict[int, list[QStructure]] = {}


def enumerated(n: int) -> list[QStructure]:
    """Cached list form of :func:`enumerate_qstructures`."""
    if n not in _ENUM_CACHE:
        _ENUM_CACHE[n] = list(enumerate_qstructures(n))
    return _ENUM_CACHE[n]


def nth_qstructure(n: int, index: int) -> QStructure:
    return enumerated(n)[index]


@dataclass
class Sample:
    structure: QStructure
    attempts: int


def _fill_table(n: int, garbage: frozenset, projective: bool, rng: random.Random,
                node_budget: int) -> tuple[list[list[int]] | None, int]:
    """Randomized backtracking over the non-unit cells of the dot table.

    Values are tried in a seeded random order; a partial table is pruned as
    soon as a fully determined symmetry, reversal or absorption instance fails.
    """
    d = [[-1] * n for _ in range(n)]
    for x in range(n):
        d[0][x] = d[x][0] = x
    cells = [(x, y) for x in range(1, n) for y in range(1, n)]
    g = garbage
    nodes = 0

    def consistent(x: int, y: int) -> bool:
        v = d[x][y]
        if projective and x in g and v not in g:
            return False
        w = d[y][x]
        if w >= 0 and (v in g) != (w in g):
            return False
        # reversal instances (a, b, c) that read the cell (x, y)
        triples = [(x, y, c) for c in range(n)] + [(a, y, x) for a in range(n)]
        triples += [(a, b, y) for a in range(n) for b in range(n) if d[a][b] == x]
        triples += [(x, b, c) for b in range(n) for c in range(n) if d[c][b] == y]
        for a, b, c in triples:
            ab = d[a][b]
            cb = d[c][b]
            if ab < 0 or cb < 0:
                continue
            lhs = d[ab][c]
            rhs = d[a][cb]
            if lhs >= 0 and rhs >= 0 and (lhs in g) != (rhs in g):
                return False
        return True

    def go(i: int) -> bool:
        nonlocal nodes
        if i == len(cells):
            return True
        x, y = cells[i]
        values = list(range(n))
        rng.shuffle(values)
        for v in values:
            nodes += 1
            if nodes > node_budget:
                return False
            d[x][y] = v
            if consistent(x, y) and go(i + 1):
                return True
        d[x][y] = -1
        return False

    return (d if go(0) else None), nodes


def sample_qstructure(size: int, seed: int, projective: bool = False,
                      allow_unit_garbage: bool = False, budget: int = 1_000_000,
                      method: str = "backtrack") -> Sample:
    """Draw a valid structure deterministically from ``seed``.

    The garbage set includes each non-unit element with probability 1/2
    (the unit only when ``allow_unit_garbage``); empty garbage is redrawn
    since it makes every non-empty set's orthogonal empty. The table is
    then filled by randomized backtracking (``method="backtrack"``) or by
    drawing whole tables uniformly (``method="rejection"``, which keeps the
    empty garbage set and mostly returns it for sizes above 3).
    ``attempts`` counts search nodes, or candidate tables for rejection.
    """
    if size < 1:
        raise ValueError("size must be positive")
    if method == "rejection":
        return _rejection_sample(size, seed, projective, allow_unit_garbage, budget)
    if method != "backtrack":
        raise ValueError(f"unknown sampling method {method!r}")
    n = size
    if n == 1:
        garbage = {0} if allow_unit_garbage and random.Random(seed).random() < 0.5 else set()
        return Sample(QStructure(1, 0, [[0]], garbage), 1)
    rng = random.Random(seed)
    attempts = 0
    while attempts < budget:
        lo = 0 if allow_unit_garbage else 1
        garbage = frozenset(i for i in range(lo, n) if rng.random() < 0.5)
        attempts += 1
        if not garbage:
            continue
        table, nodes = _fill_table(n, garbage, projective, rng,
                                   node_budget=min(20_000, budget - attempts))
        attempts += nodes
        if table is not None:
            q = QStructure(n, 0, table, garbage)
            assert not validate(q) and (is_projective(q) or not projective)
            return Sample(q, attempts)
    raise SamplingError(
        f"no valid {'projective ' if projective else ''}structure of size {size} "
        f"in {budget} attempts (seed {seed})")


def _rejection_sample(n: int, seed: int, projective: bool, allow_unit_garbage: bool,
                      budget: int, batch: int = 4096) -> Sample:
    rng = np.random.default_rng(seed)
    attempts = 0
    while attempts < budget:
        b = min(batch, budget - attempts)
        free = rng.integers(0, n, size=(b, (n - 1) ** 2))
        gz = rng.random((b, n)) < 0.5
        if not allow_unit_garbage:
            gz[:, 0] = False
        dot = _tables_with_unit(free, n)
        ok = _valid_batch(dot, gz)
        if projective:
            ok &= _projective_batch(dot, gz)
        hits = np.flatnonzero(ok)
        if hits.size:
            i = int(hits[0])
            q = QStructure(n, 0, dot[i].tolist(), set(np.flatnonzero(gz[i]).tolist()))
            return Sample(q, attempts + i + 1)
        attempts += b
    raise SamplingError(
        f"no valid {'projective ' if projective else ''}structure of size {n} "
        f"in {budget} attempts (seed {seed})")


def random_qstructure(size: int, seed: int, projective: bool = False,
                      allow_unit_garbage: bool = False, budget: int = 1_000_000,
                      method: str = "backtrack") -> QStructure:
    return sample_qstructure(size, seed, projective, allow_unit_garbage, budget,
                             method).structure


def random_fact(q: QStructure, seed: int | random.Random) -> Fact:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return rng.choice(all_facts(q))
