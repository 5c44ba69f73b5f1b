"""Randomized soundness checks for the proof rules.

Each trial draws a model, an assignment of facts and random formulas,
instantiates the rule schema with them and, when every premise is valid in
the model, requires the conclusion to be valid too.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .kernel import Mode, RuleTag, check_step
from .models import enumerated, random_qstructure
from .phase import Fact, QStructure, all_facts, is_projective
from .syntax import (BOTTOM, Atom, Formula, Neg, One, Par, Plus, Sequent, Tensor, Top,
                     With, right, sequent_valid)

ATOMS = ("a", "b", "c")
RANDOM_POOL = 40


def random_formula(rng: random.Random, depth: int = 2, names=ATOMS) -> Formula:
    if depth <= 0 or rng.random() < 0.3:
        r = rng.random()
        if r < 0.1:
            return One()
        if r < 0.15:
            return Top()
        a = Atom(rng.choice(names))
        return Neg(a) if rng.random() < 0.35 else a
    k = rng.randrange(5)
    if k == 0:
        return Neg(random_formula(rng, depth - 1, names))
    ctor = (Tensor, Par, With, Plus)[k - 1]
    return ctor(random_formula(rng, depth - 1, names), random_formula(rng, depth - 1, names))


def instantiate(rule: RuleTag, rng: random.Random,
                depth: int = 2) -> tuple[list[Sequent], Sequent]:
    """A random instance (premises, conclusion) of ``rule``."""
    A, B, C, D = (random_formula(rng, depth) for _ in range(4))
    R = RuleTag(rule)
    if R is RuleTag.AxId:
        return [], right(Neg(A), A)
    if R is RuleTag.AxTop:
        return [], right(Top(), A)
    if R is RuleTag.AxOne:
        return [], right(One())
    if R is RuleTag.Cut:
        return [right(A, B), right(Neg(A), C)], right(B, C)
    if R is RuleTag.Ex1:
        return [right(A, B)], right(B, A)
    if R is RuleTag.Ex2:
        return [right(A, B, C)], right(C, B, A)
    if R is RuleTag.WithR:
        return [right(A, C), right(B, C)], right(With(A, B), C)
    if R is RuleTag.Plus1:
        return [right(A, C)], right(Plus(A, B), C)
    if R is RuleTag.Plus2:
        return [right(A, C)], right(Plus(B, A), C)
    if R is RuleTag.BotR:
        return [right(A)], right(BOTTOM, A)
    if R is RuleTag.TensorR:
        return [right(A, C), right(B, D)], right(C, D, Tensor(A, B))
    if R is RuleTag.ParR:
        sigma = [random_formula(rng, depth) for _ in range(rng.randint(0, 2))]
        return [right(A, B, *sigma)], right(Par(A, B), *sigma)
    if R is RuleTag.WR:
        return [right(A)], right(A, B)
    raise ValueError(f"unknown rule {rule}")


@dataclass
class ModelPool:
    """Enumerated structures of size <= 3 and seeded random ones of size 4-5."""

    projective: bool
    seed: int
    enumerated: list[tuple[dict, QStructure]] = field(default_factory=list)
    sampled: list[tuple[dict, QStructure]] = field(default_factory=list)

    def __post_init__(self) -> None:
        for n in (1, 2, 3):
            for i, q in enumerate(enumerated(n)):
                if not self.projective or is_projective(q):
                    self.enumerated.append(({"kind": "enumerated", "size": n, "index": i}, q))
        rng = random.Random(self.seed)
        for _ in range(RANDOM_POOL):
            n = rng.choice((4, 5))
            s = rng.randrange(2 ** 32)
            q = random_qstructure(n, s, projective=self.projective)
            self.sampled.append(({"kind": "random", "size": n, "seed": s,
                                  "projective": self.projective}, q))

    def draw(self, rng: random.Random) -> tuple[dict, QStructure]:
        return rng.choice(self.enumerated if rng.random() < 0.5 else self.sampled)


_POOLS: dict[tuple[bool, int], ModelPool] = {}


def model_pool(projective: bool, seed: int) -> ModelPool:
    key = (projective, seed)
    if key not in _POOLS:
        _POOLS[key] = ModelPool(projective, seed)
    return _POOLS[key]


@dataclass
class Counterexample:
    trial: int
    trial_seed: int
    recipe: dict
    structure: QStructure
    assignment: dict[str, Fact]
    premises: list[Sequent]
    conclusion: Sequent

    def replay(self) -> bool:
        """True when the stored data still refutes the rule."""
        q, asg = self.structure, self.assignment
        return (all(sequent_valid(q, asg, p) for p in self.premises)
                and not sequent_valid(q, asg, self.conclusion))

    def to_dict(self) -> dict:
        return {
            "trial": self.trial, "trial_seed": self.trial_seed, "model": self.recipe,
            "assignment": {k: sorted(v.members) for k, v in self.assignment.items()},
            "premises": [str(p) for p in self.premises],
            "conclusion": str(self.conclusion),
        }


@dataclass
class HarnessReport:
    rule: RuleTag
    mode: Mode
    trials: int
    vacuous: int
    violations: list[Counterexample]

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        return (f"{self.rule.value} [{self.mode.value}]: {self.trials} trials, "
                f"{self.vacuous} vacuous, {len(self.violations)} violations")


def run_trial(rule: RuleTag, trial_seed: int, pool: ModelPool, trial: int = 0
              ) -> tuple[bool, Counterexample | None]:
    """One trial; returns (vacuous, counterexample or None)."""
    rng = random.Random(trial_seed)
    recipe, q = pool.draw(rng)
    facts = all_facts(q)
    asg = {a: rng.choice(facts) for a in ATOMS}
    premises, conclusion = instantiate(rule, rng)
    check_step(rule, premises, conclusion, Mode.projective)
    if not all(sequent_valid(q, asg, p) for p in premises):
        return True, None
    if sequent_valid(q, asg, conclusion):
        return False, None
    return False, Counterexample(trial, trial_seed, recipe, q, asg, premises, conclusion)


def soundness_harness(rule: RuleTag | str, trials: int, seed: int = 0,
                      mode: Mode | str = Mode.plain, stop_at_first: bool = False
                      ) -> HarnessReport:
    """Check ``rule`` on ``trials`` random instances.

    Models are projective when ``mode`` is projective; in plain mode they
    are unconstrained, which is how WR is shown to need projectivity.
    """
    rule, mode = RuleTag(rule), Mode(mode)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    pool = model_pool(mode is Mode.projective, seed)
    seeds = random.Random(seed)
    vacuous = 0
    violations = []
    done = 0
    for i in range(trials):
        done += 1
        vac, cx = run_trial(rule, seeds.randrange(2 ** 63), pool, i)
        vacuous += vac
        if cx is not None:
            violations.append(cx)
            if stop_at_first:
                break
    return HarnessReport(rule, mode, done, vacuous, violations)
