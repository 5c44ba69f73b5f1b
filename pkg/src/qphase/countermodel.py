"""Finite countermodel search for sequents.

Probes walk the exhaustively enumerated structures of small size with every
assignment of facts to atoms, then seeded random structures. A probe is one
(structure, assignment) pair. Not finding a countermodel says nothing about
validity.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator

from .models import enumerated, random_qstructure
from .phase import Fact, QStructure, all_facts
from .syntax import Sequent, atoms, sequent_valid

RANDOM_POOL_SIZE = 24


@dataclass
class Countermodel:
    sequent: Sequent
    structure: QStructure
    assignment: dict[str, Fact]
    probe: int
    certificate: dict = field(default_factory=dict)

    def replay(self) -> bool:
        """True when the sequent is still refuted by the stored model."""
        return not sequent_valid(self.structure, self.assignment, self.sequent)


@dataclass
class SearchOutcome:
    countermodel: Countermodel | None
    probes: int

    @property
    def inconclusive(self) -> bool:
        return self.countermodel is None


def _assignments(q: QStructure, names: list[str]) -> Iterator[tuple[int, dict[str, Fact]]]:
    facts = all_facts(q)
    for k, combo in enumerate(itertools.product(facts, repeat=len(names))):
        yield k, dict(zip(names, combo))


def _probes(s: Sequent, max_size: int, seed: int, enum_max_size: int,
            enum_budget: int) -> Iterator[tuple[QStructure, dict[str, Fact], dict]]:
    names = sorted(set().union(*(atoms(f) for f in s.antecedents + s.succedents)))
    enum = (
        (q, asg, {"phase": "enumerated", "size": n, "index": index, "assignment_index": k})
        for n in range(1, min(enum_max_size, max_size) + 1)
        for index, q in enumerate(enumerated(n))
        for k, asg in _assignments(q, names))
    yield from itertools.islice(enum, enum_budget)
    rng = random.Random(seed)
    pool = []
    for _ in range(RANDOM_POOL_SIZE):
        n = rng.randint(2, max_size)
        model_seed = rng.randrange(2 ** 32)
        pool.append((n, model_seed, random_qstructure(n, model_seed)))
    while True:
        n, model_seed, q = rng.choice(pool)
        facts = all_facts(q)
        yield q, {a: rng.choice(facts) for a in names}, {
            "phase": "random", "size": n, "model_seed": model_seed, "seed": seed}


def falsify(s: Sequent, max_size: int = 6, seed: int = 0, budget: int = 10_000,
            enum_max_size: int = 3) -> SearchOutcome:
    """Search for a model and assignment in which ``s`` is not valid.

    At most half of ``budget`` goes to the enumerated structures of size
    up to ``enum_max_size``; the rest to random structures of size 2 to
    ``max_size``.
    """
    probes = _probes(s, max_size, seed, enum_max_size, budget // 2)
    for i, (q, asg, cert) in enumerate(itertools.islice(probes, budget)):
        if not sequent_valid(q, asg, s):
            cert["probe"] = i
            return SearchOutcome(Countermodel(s, q, asg, i, cert), i + 1)
    return SearchOutcome(None, budget)
