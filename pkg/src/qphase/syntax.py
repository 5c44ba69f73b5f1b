"""Formulas, sequents, and their evaluation in a Q-structure.

Grammar (ASCII)::

    formula := unary (OP unary)*      -- one OP repeated, left-associated
    unary   := "~" unary | atom | "1" | "T" | "(" formula ")"
    OP      := "*" (times) | "|" (par) | "&" (with) | "+" (plus) | "-o" (implication)

Mixing different binary connectives without parentheses is an error.
``a -o b`` is read as ``~a | b`` at construction. The constants bottom and
zero are written ``~1`` and ``~T``.

A sequent is written ``F1, F2 |- G1, G2``; either side may be empty.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence, Union

from . import phase
from .phase import Fact, QStructure

ATOM_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class EvaluationError(KeyError):
    pass


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self) -> None:
        if not ATOM_RE.match(self.name):
            raise ValueError(f"bad atom name {self.name!r}")


@dataclass(frozen=True)
class Neg:
    arg: "Formula"


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Tensor:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Par:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class With:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Plus:
    left: "Formula"
    right: "Formula"


Formula = Union[Atom, Neg, One, Top, Tensor, Par, With, Plus]
Binary = (Tensor, Par, With, Plus)

BOTTOM = Neg(One())
ZERO = Neg(Top())


def limp(left: Formula, right: Formula) -> Par:
    """Linear implication, kept as ``~left | right``."""
    return Par(Neg(left), right)


# -- printing ---------------------------------------------------------------

_SYMBOL = {Tensor: "*", Par: "|", With: "&", Plus: "+"}


def show(f: Formula) -> str:
    """Fully parenthesized canonical text; ``parse(show(f)) == f``."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, One):
        return "1"
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Neg):
        return "~" + show(f.arg)
    return f"({show(f.left)} {_SYMBOL[type(f)]} {show(f.right)})"


# -- parsing ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(-o)|([a-z][a-z0-9_]*)|([()~*|&+1T]))")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start)
        tok = m.group(1) or m.group(2) or m.group(3)
        tokens.append((tok, m.start(m.lastindex)))
        pos = m.end()
    return tokens


_BUILD: dict[str, Callable[[Formula, Formula], Formula]] = {
    "*": Tensor, "|": Par, "&": With, "+": Plus, "-o": limp,
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def take(self) -> str:
        tok = self.tokens[self.i][0]
        self.i += 1
        return tok

    def formula(self) -> Formula:
        left = self.unary()
        op = None
        while self.peek() in _BUILD:
            if op is not None and self.peek() != op:
                raise ParseError(
                    f"mixed connectives {op!r} and {self.peek()!r} need parentheses", self.pos())
            op = self.take()
            left = _BUILD[op](left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.pos())
        if tok == "~":
            self.take()
            return Neg(self.unary())
        if tok == "(":
            start = self.pos()
            self.take()
            f = self.formula()
            if self.peek() != ")":
                raise ParseError(f"unbalanced parenthesis opened at {start}", self.pos())
            self.take()
            return f
        if tok == "1":
            self.take()
            return One()
        if tok == "T":
            self.take()
            return Top()
        if ATOM_RE.match(tok):
            self.take()
            return Atom(tok)
        raise ParseError(f"unexpected token {tok!r}", self.pos())


def parse(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    if p.peek() is not None:
        raise ParseError(f"unexpected token {p.peek()!r}", p.pos())
    return f


# -- normal forms and folds ---------------------------------------------------

_DUAL = {Tensor: Par, Par: Tensor, With: Plus, Plus: With}


def nnf(f: Formula) -> Formula:
    """Push negations onto atoms and constants; argument order is kept."""
    if isinstance(f, (Atom, One, Top)):
        return f
    if isinstance(f, Neg):
        g = f.arg
        if isinstance(g, (Atom, One, Top)):
            return f
        if isinstance(g, Neg):
            return nnf(g.arg)
        return _DUAL[type(g)](nnf(Neg(g.left)), nnf(Neg(g.right)))
    return type(f)(nnf(f.left), nnf(f.right))


def is_nnf(f: Formula) -> bool:
    if isinstance(f, Neg):
        return isinstance(f.arg, (Atom, One, Top))
    if isinstance(f, Binary):
        return is_nnf(f.left) and is_nnf(f.right)
    return True


def negate(f: Formula) -> Formula:
    """The nnf of ``~f``."""
    return nnf(Neg(f))


def atoms(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, Neg):
        return atoms(f.arg)
    if isinstance(f, Binary):
        return atoms(f.left) | atoms(f.right)
    return set()


def subformulas(f: Formula) -> list[Formula]:
    out = [f]
    if isinstance(f, Neg):
        out += subformulas(f.arg)
    elif isinstance(f, Binary):
        out += subformulas(f.left) + subformulas(f.right)
    return out


def _fold(ctor, fs: Sequence[Formula]) -> Formula:
    if not fs:
        raise ValueError("cannot fold an empty sequence")
    acc = fs[0]
    for f in fs[1:]:
        acc = ctor(acc, f)
    return acc


def fold_pars(fs: Sequence[Formula]) -> Formula:
    return _fold(Par, fs)


def fold_tensors(fs: Sequence[Formula]) -> Formula:
    return _fold(Tensor, fs)


# -- sequents -----------------------------------------------------------------

@dataclass(frozen=True)
class Sequent:
    antecedents: tuple[Formula, ...]
    succedents: tuple[Formula, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "antecedents", tuple(self.antecedents))
        object.__setattr__(self, "succedents", tuple(self.succedents))
        if not self.antecedents and not self.succedents:
            raise ValueError("a sequent needs at least one formula")

    @property
    def right_sided(self) -> bool:
        return not self.antecedents

    def __str__(self) -> str:
        left = ", ".join(show(f) for f in self.antecedents)
        right = ", ".join(show(f) for f in self.succedents)
        return f"{left} |- {right}".strip() if left else f"|- {right}".rstrip()


def right(*fs: Formula) -> Sequent:
    return Sequent((), fs)


def _split_side(text: str, offset: int) -> list[Formula]:
    if not text.strip():
        return []
    out = []
    pos = 0
    for part in text.split(","):
        if not part.strip():
            raise ParseError("empty formula in sequent", offset + pos)
        try:
            out.append(parse(part))
        except ParseError as e:
            raise ParseError(str(e).rsplit(" at position", 1)[0], offset + pos + e.position) from None
        pos += len(part) + 1
    return out


def parse_sequent(text: str) -> Sequent:
    if text.count("|-") != 1:
        raise ParseError("a sequent needs exactly one '|-'", text.find("|-") if "|-" in text else 0)
    k = text.index("|-")
    left = _split_side(text[:k], 0)
    right_ = _split_side(text[k + 2:], k + 2)
    if not left and not right_:
        raise ParseError("both sides of the sequent are empty", k)
    return Sequent(tuple(left), tuple(right_))


# -- semantics ----------------------------------------------------------------

Assignment = Mapping[str, Fact]


def eval_formula(q: QStructure, asg: Assignment, f: Formula) -> Fact:
    if isinstance(f, Atom):
        try:
            val = asg[f.name]
        except KeyError:
            raise EvaluationError(f"unbound atom {f.name!r}") from None
        if not (val.q is q or val.q == q):
            raise phase.MixedStructureError(f"atom {f.name!r} is bound in another structure")
        return val
    if isinstance(f, One):
        return phase.one_fact(q)
    if isinstance(f, Top):
        return phase.top_fact(q)
    if isinstance(f, Neg):
        return phase.neg(eval_formula(q, asg, f.arg))
    op = {Tensor: phase.tensor, Par: phase.par, With: phase.with_, Plus: phase.plus}[type(f)]
    return op(eval_formula(q, asg, f.left), eval_formula(q, asg, f.right))


def sequent_fact(q: QStructure, asg: Assignment, s: Sequent) -> Fact:
    """The fact whose validity is the validity of ``s``.

    An empty succedent stands for ``~1``; an empty antecedent leaves just
    the folded succedent.
    """
    succ = fold_pars(s.succedents) if s.succedents else BOTTOM
    rhs = eval_formula(q, asg, succ)
    if not s.antecedents:
        return rhs
    return phase.limp(eval_formula(q, asg, fold_tensors(s.antecedents)), rhs)


def sequent_valid(q: QStructure, asg: Assignment, s: Sequent) -> bool:
    return phase.is_valid_fact(sequent_fact(q, asg, s))


def right_normalize(s: Sequent) -> Sequent:
    """Move antecedents to the right, rightmost first, as nnf negations.

    ``A1, ..., An |- B1, ..., Bm`` becomes ``|- B1, ..., Bm, ~An, ..., ~A1``;
    an empty succedent starts as ``~1``.
    """
    if not s.antecedents:
        return s
    succ = list(s.succedents) or [BOTTOM]
    for a in reversed(s.antecedents):
        succ.append(negate(a))
    return Sequent((), tuple(succ))


def bind(q: QStructure, raw: Mapping[str, Iterable[int | str]]) -> dict[str, Fact]:
    """Build an assignment from element labels or indices."""
    return {name: phase.make_fact(q, members) for name, members in raw.items()}
