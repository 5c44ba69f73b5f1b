"""Proof checking and bounded proof search for right-sided sequents.

Rules (sequents are ordered sequences, contexts are single formulas except
for the par rule)::

    AxId     |- ~A, A
    AxTop    |- T, A
    AxOne    |- 1
    Cut      |- A, B    |- ~A, C   =>  |- B, C
    Ex1      |- A1, A2             =>  |- A2, A1
    Ex2      |- A1, A2, A3         =>  |- A3, A2, A1
    WithR    |- A, C    |- B, C    =>  |- A & B, C
    Plus1    |- A, C               =>  |- A + B, C
    Plus2    |- A, C               =>  |- B + A, C
    BotR     |- A                  =>  |- ~1, A
    TensorR  |- A, C    |- B, D    =>  |- C, D, A * B
    ParR     |- A, B, s            =>  |- A | B, s
    WR       |- A                  =>  |- A, B        (projective mode only)

Formulas are compared after negation normal form, so ``~(a * b)`` and
``~a | ~b`` are the same formula to the checker. There is no inverse of
ParR.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .syntax import (BOTTOM, Formula, One, Par, Plus, Sequent, Tensor, Top, With,
                     negate, nnf, parse_sequent, show, subformulas)


class RuleTag(str, Enum):
    AxId = "AxId"
    AxTop = "AxTop"
    AxOne = "AxOne"
    Cut = "Cut"
    Ex1 = "Ex1"
    Ex2 = "Ex2"
    WithR = "WithR"
    Plus1 = "Plus1"
    Plus2 = "Plus2"
    BotR = "BotR"
    TensorR = "TensorR"
    ParR = "ParR"
    WR = "WR"


class Mode(str, Enum):
    plain = "plain"
    projective = "projective"


ARITY = {
    RuleTag.AxId: 0, RuleTag.AxTop: 0, RuleTag.AxOne: 0,
    RuleTag.Ex1: 1, RuleTag.Ex2: 1, RuleTag.Plus1: 1, RuleTag.Plus2: 1,
    RuleTag.BotR: 1, RuleTag.ParR: 1, RuleTag.WR: 1,
    RuleTag.Cut: 2, RuleTag.WithR: 2, RuleTag.TensorR: 2,
}

PLAIN_RULES = tuple(r for r in RuleTag if r is not RuleTag.WR)


class RuleError(ValueError):
    def __init__(self, rule: RuleTag | str, where: str, reason: str):
        self.rule = rule
        self.where = where
        self.reason = reason
        super().__init__(f"{rule}: {where}: {reason}")


class ArityError(RuleError):
    pass


class ShapeError(RuleError):
    pass


class ModeError(RuleError):
    pass


class ProofError(ValueError):
    def __init__(self, path: tuple[int, ...], cause: RuleError):
        self.path = path
        self.cause = cause
        loc = "root" if not path else "root/" + "/".join(map(str, path))
        super().__init__(f"at {loc}: {cause}")


def _norm(s: Sequent, rule: RuleTag, where: str) -> tuple[Formula, ...]:
    if not s.right_sided:
        raise ShapeError(rule, where, "sequent has antecedents; right-normalize it first")
    return tuple(nnf(f) for f in s.succedents)


def _need_len(rule: RuleTag, where: str, fs: tuple, n: int) -> None:
    if len(fs) != n:
        raise ShapeError(rule, where, f"expected {n} formulas, found {len(fs)}")


def _need_eq(rule: RuleTag, where: str, got: Formula, want: Formula) -> None:
    if got != want:
        raise ShapeError(rule, where, f"expected {show(want)}, found {show(got)}")


def check_step(rule: RuleTag | str, premises: Sequence[Sequent], conclusion: Sequent,
               mode: Mode | str = Mode.plain) -> None:
    """Raise a RuleError unless the step is an instance of ``rule``."""
    rule = RuleTag(rule)
    mode = Mode(mode)
    if rule is RuleTag.WR and mode is not Mode.projective:
        raise ModeError(rule, "rule", "WR is only available in projective mode")
    if len(premises) != ARITY[rule]:
        raise ArityError(rule, "premises",
                         f"expected {ARITY[rule]} premises, found {len(premises)}")
    ps = [_norm(p, rule, f"premise {i}") for i, p in enumerate(premises)]
    c = _norm(conclusion, rule, "conclusion")
    C = "conclusion"

    if rule is RuleTag.AxId:
        _need_len(rule, C, c, 2)
        _need_eq(rule, "conclusion formula 0", c[0], negate(c[1]))
    elif rule is RuleTag.AxTop:
        _need_len(rule, C, c, 2)
        _need_eq(rule, "conclusion formula 0", c[0], Top())
    elif rule is RuleTag.AxOne:
        _need_len(rule, C, c, 1)
        _need_eq(rule, "conclusion formula 0", c[0], One())
    elif rule is RuleTag.Cut:
        _need_len(rule, "premise 0", ps[0], 2)
        _need_len(rule, "premise 1", ps[1], 2)
        _need_eq(rule, "premise 1 formula 0", ps[1][0], negate(ps[0][0]))
        _need_len(rule, C, c, 2)
        _need_eq(rule, "conclusion formula 0", c[0], ps[0][1])
        _need_eq(rule, "conclusion formula 1", c[1], ps[1][1])
    elif rule in (RuleTag.Ex1, RuleTag.Ex2):
        n = 2 if rule is RuleTag.Ex1 else 3
        _need_len(rule, "premise 0", ps[0], n)
        _need_len(rule, C, c, n)
        for i, f in enumerate(reversed(ps[0])):
            _need_eq(rule, f"conclusion formula {i}", c[i], f)
    elif rule is RuleTag.WithR:
        _need_len(rule, "premise 0", ps[0], 2)
        _need_len(rule, "premise 1", ps[1], 2)
        _need_eq(rule, "premise 1 formula 1", ps[1][1], ps[0][1])
        _need_len(rule, C, c, 2)
        _need_eq(rule, "conclusion formula 0", c[0], With(ps[0][0], ps[1][0]))
        _need_eq(rule, "conclusion formula 1", c[1], ps[0][1])
    elif rule in (RuleTag.Plus1, RuleTag.Plus2):
        _need_len(rule, "premise 0", ps[0], 2)
        _need_len(rule, C, c, 2)
        if not isinstance(c[0], Plus):
            raise ShapeError(rule, "conclusion formula 0", f"expected a plus, found {show(c[0])}")
        kept = c[0].left if rule is RuleTag.Plus1 else c[0].right
        _need_eq(rule, "conclusion formula 0", kept, ps[0][0])
        _need_eq(rule, "conclusion formula 1", c[1], ps[0][1])
    elif rule is RuleTag.BotR:
        _need_len(rule, "premise 0", ps[0], 1)
        _need_len(rule, C, c, 2)
        _need_eq(rule, "conclusion formula 0", c[0], BOTTOM)
        _need_eq(rule, "conclusion formula 1", c[1], ps[0][0])
    elif rule is RuleTag.TensorR:
        _need_len(rule, "premise 0", ps[0], 2)
        _need_len(rule, "premise 1", ps[1], 2)
        _need_len(rule, C, c, 3)
        _need_eq(rule, "conclusion formula 0", c[0], ps[0][1])
        _need_eq(rule, "conclusion formula 1", c[1], ps[1][1])
        _need_eq(rule, "conclusion formula 2", c[2], Tensor(ps[0][0], ps[1][0]))
    elif rule is RuleTag.ParR:
        if len(ps[0]) < 2:
            raise ShapeError(rule, "premise 0", f"expected at least 2 formulas, found {len(ps[0])}")
        _need_len(rule, C, c, len(ps[0]) - 1)
        _need_eq(rule, "conclusion formula 0", c[0], Par(ps[0][0], ps[0][1]))
        for i, f in enumerate(ps[0][2:], start=1):
            _need_eq(rule, f"conclusion formula {i}", c[i], f)
    elif rule is RuleTag.WR:
        _need_len(rule, "premise 0", ps[0], 1)
        _need_len(rule, C, c, 2)
        _need_eq(rule, "conclusion formula 0", c[0], ps[0][0])


@dataclass(frozen=True)
class ProofTree:
    conclusion: Sequent
    rule: RuleTag
    premises: tuple["ProofTree", ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "rule", RuleTag(self.rule))
        object.__setattr__(self, "premises", tuple(self.premises))

    @property
    def height(self) -> int:
        return 1 + max((p.height for p in self.premises), default=0)

    def to_dict(self) -> dict:
        return {"rule": self.rule.value, "conclusion": str(self.conclusion),
                "premises": [p.to_dict() for p in self.premises]}

    @classmethod
    def from_dict(cls, d: dict) -> "ProofTree":
        return cls(parse_sequent(d["conclusion"]), RuleTag(d["rule"]),
                   tuple(cls.from_dict(p) for p in d.get("premises", [])))

    def render(self, indent: int = 0) -> str:
        lines = ["  " * indent + f"{self.conclusion}   [{self.rule.value}]"]
        lines += [p.render(indent + 1) for p in self.premises]
        return "\n".join(lines)


def check_proof(t: ProofTree, mode: Mode | str = Mode.plain,
                _path: tuple[int, ...] = ()) -> None:
    """Raise ProofError, carrying the premise-index path, at the first bad node."""
    try:
        check_step(t.rule, [p.conclusion for p in t.premises], t.conclusion, mode)
    except RuleError as e:
        raise ProofError(_path, e) from None
    for i, p in enumerate(t.premises):
        check_proof(p, mode, _path + (i,))


# -- search -----------------------------------------------------------------

class _Searcher:
    def __init__(self, mode: Mode, cut_formulas: list[Formula]):
        self.mode = mode
        self.cut_formulas = cut_formulas
        self.failed: set[tuple[tuple[Formula, ...], int]] = set()

    def prove(self, g: tuple[Formula, ...], depth: int) -> ProofTree | None:
        if depth <= 0 or (g, depth) in self.failed:
            return None
        t = self._try(g, depth)
        if t is None:
            self.failed.add((g, depth))
        return t

    def _node(self, g, rule, *subs):
        return ProofTree(Sequent((), g), rule, subs)

    def _chain(self, g, rule, depth, *goals):
        subs = []
        for sub in goals:
            t = self.prove(sub, depth - 1)
            if t is None:
                return None
            subs.append(t)
        return self._node(g, rule, *subs)

    def _try(self, g, depth):
        n = len(g)
        if n == 2 and g[0] == negate(g[1]):
            return self._node(g, RuleTag.AxId)
        if n == 2 and g[0] == Top():
            return self._node(g, RuleTag.AxTop)
        if n == 1 and g[0] == One():
            return self._node(g, RuleTag.AxOne)
        if depth == 1:
            return None
        head = g[0]
        attempts = []
        if n >= 1 and isinstance(head, Par):
            attempts.append((RuleTag.ParR, [(head.left, head.right) + g[1:]]))
        if n == 2 and isinstance(head, With):
            attempts.append((RuleTag.WithR, [(head.left, g[1]), (head.right, g[1])]))
        if n == 2 and isinstance(head, Plus):
            attempts.append((RuleTag.Plus1, [(head.left, g[1])]))
            attempts.append((RuleTag.Plus2, [(head.right, g[1])]))
        if n == 2 and head == BOTTOM:
            attempts.append((RuleTag.BotR, [(g[1],)]))
        if n == 3 and isinstance(g[2], Tensor):
            attempts.append((RuleTag.TensorR, [(g[2].left, g[0]), (g[2].right, g[1])]))
        if n == 2 and self.mode is Mode.projective:
            attempts.append((RuleTag.WR, [(g[0],)]))
        if n == 2:
            attempts.append((RuleTag.Ex1, [(g[1], g[0])]))
        if n == 3:
            attempts.append((RuleTag.Ex2, [(g[2], g[1], g[0])]))
        if n == 2:
            for a in self.cut_formulas:
                attempts.append((RuleTag.Cut, [(a, g[0]), (negate(a), g[1])]))
        for rule, goals in attempts:
            t = self._chain(g, rule, depth, *goals)
            if t is not None:
                return t
        return None


def search(goal: Sequent, max_depth: int, mode: Mode | str = Mode.plain,
           allow_cut: bool = False) -> ProofTree | None:
    """Iterative-deepening backward search; ``None`` means not found, not unprovable.

    The depth bound is the tree height. Cut, when allowed, only uses
    subformulas of the goal and their negations as cut formulas.
    """
    mode = Mode(mode)
    if not goal.right_sided:
        raise ValueError("search expects a right-sided sequent")
    g = tuple(nnf(f) for f in goal.succedents)
    cuts: list[Formula] = []
    if allow_cut:
        seen = set()
        for f in g:
            for s in subformulas(f):
                for c in (nnf(s), negate(s)):
                    if c not in seen:
                        seen.add(c)
                        cuts.append(c)
        cuts.sort(key=show)
    searcher = _Searcher(mode, cuts)
    for depth in range(1, max_depth + 1):
        t = searcher.prove(g, depth)
        if t is not None:
            if t.conclusion != goal:
                t = ProofTree(goal, t.rule, t.premises)
            return t
    return None
