"""Exact rational subspaces of Q^d.

Subspaces are kept in reduced row-echelon form with unit pivots, so two
equal subspaces compare equal field by field. The inner product is the
standard dot product.

``project_subspace(a, b)`` projects each basis vector of ``a`` onto ``b``
and spans the results. Since projection is linear, the image of any vector
of ``a`` is a combination of those images, so this is the projection of
the whole subspace.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]


class DimensionError(ValueError):
    pass


def vec(coords) -> Vector:
    """Build a rational vector from numbers, strings like ``"1/2"``, or a
    comma-separated string like ``"1/2,-3,0"``."""
    if isinstance(coords, str):
        coords = [c for c in coords.split(",")]
    return tuple(Fraction(str(c).strip()) if isinstance(c, str) else Fraction(c)
                 for c in coords)


def inner(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __str__(self) -> str:
        if not self.basis:
            return "{0}"
        return "span[" + "; ".join(
            "(" + ",".join(str(x) for x in v) + ")" for v in self.basis) + "]"


def span(vectors: Sequence[Sequence], ambient_dim: int | None = None) -> Subspace:
    vs = [vec(v) for v in vectors]
    dims = {len(v) for v in vs}
    if ambient_dim is not None:
        dims.add(ambient_dim)
    if len(dims) > 1:
        raise DimensionError(f"mixed dimensions {sorted(dims)}")
    if not dims:
        raise DimensionError("ambient dimension unknown for an empty span")
    d = dims.pop()
    rows, _ = _rref([list(v) for v in vs], d)
    return Subspace(d, tuple(tuple(r) for r in rows))


def zero_space(d: int) -> Subspace:
    return Subspace(d, ())


def full_space(d: int) -> Subspace:
    return span([[Fraction(int(i == j)) for j in range(d)] for i in range(d)], d)


def _agree(*dims: int) -> int:
    if len(set(dims)) != 1:
        raise DimensionError(f"dimension mismatch {dims}")
    return dims[0]


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    # a is square and invertible (a Gram matrix of independent rows)
    n = len(a)
    aug = [row[:] + [rhs] for row, rhs in zip(a, b)]
    red, _ = _rref(aug, n)
    return [row[n] for row in red]


def project_vector(v: Sequence, b: Subspace) -> Vector:
    v = vec(v)
    _agree(len(v), b.ambient_dim)
    if not b.basis:
        return tuple(Fraction(0) for _ in v)
    gram = [[inner(u, w) for w in b.basis] for u in b.basis]
    coeffs = _solve(gram, [inner(u, v) for u in b.basis])
    return tuple(sum((c * u[i] for c, u in zip(coeffs, b.basis)), Fraction(0))
                 for i in range(b.ambient_dim))


def project_subspace(a: Subspace, b: Subspace) -> Subspace:
    """The operation ``a . b``: the projection of ``a`` on ``b``."""
    d = _agree(a.ambient_dim, b.ambient_dim)
    return span([project_vector(u, b) for u in a.basis], d)


def ortho_complement(a: Subspace) -> Subspace:
    d = a.ambient_dim
    rows, pivots = _rref([list(v) for v in a.basis], d)
    free = [c for c in range(d) if c not in pivots]
    null = []
    for f in free:
        x = [Fraction(0)] * d
        x[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            x[p] = -row[f]
        null.append(x)
    return span(null, d)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    d = _agree(a.ambient_dim, b.ambient_dim)
    return span(list(a.basis) + list(b.basis), d)


def subspace_meet(a: Subspace, b: Subspace) -> Subspace:
    return ortho_complement(subspace_sum(ortho_complement(a), ortho_complement(b)))


def is_zero(a: Subspace) -> bool:
    return not a.basis


def contains(a: Subspace, v: Sequence) -> bool:
    v = vec(v)
    _agree(len(v), a.ambient_dim)
    return subspace_sum(a, span([v], a.ambient_dim)).rank == a.rank


def is_orthogonal(a: Subspace, b: Subspace) -> bool:
    _agree(a.ambient_dim, b.ambient_dim)
    return all(inner(u, w) == 0 for u in a.basis for w in b.basis)


def parse_vector(text: str) -> Vector:
    return vec(text)


def parse_subspace(text: str, ambient_dim: int | None = None) -> Subspace:
    """``"1,0;0,1"`` -> span of the two vectors; ``""`` needs ``ambient_dim``."""
    parts = [p for p in text.split(";") if p.strip()]
    return span([vec(p) for p in parts], ambient_dim)


def random_subspace(d: int, rng: random.Random) -> Subspace:
    """Rank uniform in [0, d]; entries num/den with num in [-9, 9], den in [1, 9].

    Rank-deficient draws are rejected and redrawn.
    """
    rank = rng.randint(0, d)
    while True:
        rows = [[Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(d)]
                for _ in range(rank)]
        s = span(rows, d)
        if s.rank == rank:
            return s
