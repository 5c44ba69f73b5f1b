"""Executable algebraic laws over a finite structure.

Each ``check_*`` function runs one family of laws exhaustively (over all
subsets or all facts of a structure) and returns a list of failure strings;
an empty list means every instance held. Everything is exact set algebra on
bitmasks, so there is no tolerance anywhere.
"""

from __future__ import annotations

from itertools import product

from .phase import (Fact, QStructure, all_facts, is_projective, is_valid_fact, limp, neg,
                    one_fact, par, plus, tensor, top_fact, with_, z_fact, zero_fact)

Failures = list[str]


def _sub(a: int, b: int) -> bool:
    return a & ~b == 0


def _fact(q: QStructure, mask: int) -> Fact:
    return Fact(q, mask)


def check_closure(q: QStructure) -> Failures:
    """Orthogonality laws over every pair of subsets, plus fact closure."""
    out: Failures = []
    n = q.size
    subsets = range(1 << n)
    orths = [q.orth_mask(a) for a in subsets]
    for a in subsets:
        oa = orths[a]
        if not _sub(a, orths[oa]):
            out.append(f"extensivity fails for {a:#x}")
        if orths[orths[oa]] != oa:
            out.append(f"triple orth fails for {a:#x}")
        for b in subsets:
            if _sub(b, a) and not _sub(oa, orths[b]):
                out.append(f"antitonicity fails for {b:#x} <= {a:#x}")
            if orths[a | b] != oa & orths[b]:
                out.append(f"orth of union fails for {a:#x}, {b:#x}")
    facts = [f.mask for f in all_facts(q)]
    fact_set = set(facts)
    for a in subsets:
        is_f = orths[orths[a]] == a
        if is_f != (a in fact_set):
            out.append(f"fact list disagrees with fixpoint test on {a:#x}")
        if is_f != (a in set(orths)):
            out.append(f"fact {a:#x} is not an orthogonal (or vice versa)")
    for f, g in product(facts, repeat=2):
        if f & g not in fact_set:
            out.append(f"intersection {f:#x} & {g:#x} is not a fact")
    one = one_fact(q).mask
    for x, y in product(range(n), repeat=2):
        if one >> x & 1 and one >> y & 1 and not one >> q.dot[x][y] & 1:
            out.append(f"one not closed under dot at ({x}, {y})")
    if facts[0] != zero_fact(q).mask or any(not _sub(facts[0], f) for f in facts):
        out.append("zero is not the least fact")
    return out


def check_connectives(q: QStructure) -> Failures:
    """Connective lemmas and dualities over every fact pair and triple."""
    out: Failures = []
    n = q.size
    facts = all_facts(q)
    one, top, zero = one_fact(q), top_fact(q), zero_fact(q)
    u = q.unit
    for A, B in product(range(1 << n), repeat=2):
        if not _sub(q.orth_mask(q.dot_mask(A, B)), q.orth_mask(q.dot_mask(q.biorth_mask(A), B))):
            out.append(f"product: {A:#x}, {B:#x}")
    for F in facts:
        if tensor(one, F) != F:
            out.append(f"before_neutral left: {F!r}")
        if not F <= tensor(F, one):
            out.append(f"before_neutral right: {F!r}")
        if not is_valid_fact(par(F, neg(F))):
            out.append(f"axiom: {F!r}")
        if with_(top, F) != F or plus(top, F) != top:
            out.append(f"top unit laws: {F!r}")
        if not zero <= F or with_(zero, F) != zero or plus(zero, F) != F:
            out.append(f"zero: {F!r}")
        if neg(neg(F)) != F:
            out.append(f"involution: {F!r}")
    for F, G in product(facts, repeat=2):
        nF, nG = neg(F), neg(G)
        if par(F, G) != neg(tensor(nF, nG)):
            out.append(f"par duality: {F!r}, {G!r}")
        if tensor(F, G) != neg(par(nF, nG)):
            out.append(f"tensor duality: {F!r}, {G!r}")
        li = limp(F, G)
        if li != par(nF, G) or li != neg(tensor(F, nG)):
            out.append(f"limp duality: {F!r}, {G!r}")
        if plus(F, G) != neg(with_(nF, nG)):
            out.append(f"plus duality: {F!r}, {G!r}")
        if with_(F, G) != with_(G, F) or plus(F, G) != plus(G, F):
            out.append(f"additive commutativity: {F!r}, {G!r}")
        for x in range(n):
            lhs = x in li
            rhs = all(q.dot[x][h] in nF for h in nG)
            if lhs != rhs:
                out.append(f"imp: {F!r}, {G!r}, x={x}")
        pfg = par(F, G)
        c = [u in pfg, nG <= F, nF <= G, u in par(G, F)]
        if len(set(c)) != 1:
            out.append(f"1par: {F!r}, {G!r}")
        if is_valid_fact(li) != (F <= G):
            out.append(f"implication: {F!r}, {G!r}")
    for F, G, H in product(facts, repeat=3):
        if tensor(tensor(F, G), H) != _fact(q, q.biorth_mask(q.dot_mask(q.dot_mask(F.mask, G.mask), H.mask))):
            out.append(f"assoc: {F!r}, {G!r}, {H!r}")
        if is_valid_fact(limp(tensor(F, G), H)) != is_valid_fact(limp(F, par(H, neg(G)))):
            out.append(f"passing: {F!r}, {G!r}, {H!r}")
        gh = with_(G, H)
        if par(F, gh) != with_(par(F, G), par(F, H)):
            out.append(f"dist1 right: {F!r}, {G!r}, {H!r}")
        if par(gh, F) != with_(par(G, F), par(H, F)):
            out.append(f"dist1 left: {F!r}, {G!r}, {H!r}")
        if not par(F, gh) <= with_(par(F, G), par(F, H)):
            out.append(f"dist1 inclusion right: {F!r}, {G!r}, {H!r}")
        if not par(gh, F) <= with_(par(G, F), par(H, F)):
            out.append(f"dist1 inclusion left: {F!r}, {G!r}, {H!r}")
        if not tensor(F, gh) <= with_(tensor(F, G), tensor(F, H)):
            out.append(f"semi-dist right: {F!r}, {G!r}, {H!r}")
        if not tensor(gh, F) <= with_(tensor(G, F), tensor(H, F)):
            out.append(f"semi-dist left: {F!r}, {G!r}, {H!r}")
        gph = plus(G, H)
        if tensor(F, gph) != plus(tensor(F, G), tensor(F, H)):
            out.append(f"tensor over plus right: {F!r}, {G!r}, {H!r}")
        if tensor(gph, F) != plus(tensor(G, F), tensor(H, F)):
            out.append(f"tensor over plus left: {F!r}, {G!r}, {H!r}")
        if not plus(tensor(F, G), tensor(F, H)) <= tensor(F, gph):
            out.append(f"tensor over plus inclusion right: {F!r}, {G!r}, {H!r}")
        if not plus(tensor(G, F), tensor(H, F)) <= tensor(gph, F):
            out.append(f"tensor over plus inclusion left: {F!r}, {G!r}, {H!r}")
        if not plus(par(F, G), par(F, H)) <= par(F, gph):
            out.append(f"par semi-dist over plus: {F!r}, {G!r}, {H!r}")
        if with_(with_(F, G), H) != with_(F, with_(G, H)):
            out.append(f"with assoc: {F!r}, {G!r}, {H!r}")
        if plus(plus(F, G), H) != plus(F, plus(G, H)):
            out.append(f"plus assoc: {F!r}, {G!r}, {H!r}")
    return out


def check_projective(q: QStructure) -> Failures:
    """Laws that hold in projective structures; ``q`` must be projective."""
    if not is_projective(q):
        return ["structure is not projective"]
    out: Failures = []
    n = q.size
    G = q.garbage_mask
    z = lambda x: bool(G >> x & 1)  # noqa: E731
    d = q.dot
    for x, y in product(range(n), repeat=2):
        if z(d[x][y]) and not z(d[d[x][x]][y]):
            out.append(f"xx=x forward: ({x}, {y})")
        if z(d[d[x][x]][y]) and not z(d[x][y]):
            out.append(f"xx=x converse: ({x}, {y})")
        for w in range(n):
            if z(d[x][w]) and z(d[y][w]) and not z(d[d[x][y]][w]):
                out.append(f"xx=x orthogonality: ({x}, {y}, {w})")
    for A in range(1 << n):
        oA = q.orth_mask(A)
        if not _sub(A, q.biorth_mask(q.dot_mask(A, A))):
            out.append(f"projective A.A: {A:#x}")
        if not _sub(q.dot_mask(oA, oA), oA):
            out.append(f"projective orth closed: {A:#x}")
        for B in range(1 << n):
            if not _sub(oA, q.orth_mask(q.dot_mask(B, A))):
                out.append(f"main_proj 1: {A:#x}, {B:#x}")
            if not _sub(A, q.orth_mask(q.dot_mask(B, oA))):
                out.append(f"main_proj 2: {A:#x}, {B:#x}")
    facts = all_facts(q)
    if one_fact(q) != top_fact(q):
        out.append("one is not the carrier")
    if z_fact(q) != zero_fact(q):
        out.append("z-fact is not zero")
    zf = z_fact(q)
    for F in facts:
        if not _sub(q.dot_mask(F.mask, F.mask), F.mask):
            out.append(f"F.F: {F!r}")
        FF, PP = tensor(F, F), par(F, F)
        if not FF <= F:
            out.append(f"tensor idempotence F*F <= F: {F!r}")
        if not F <= FF:
            out.append(f"tensor idempotence F <= F*F: {F!r}")
        if not F <= PP:
            out.append(f"par idempotence F <= F|F: {F!r}")
        if not PP <= F:
            out.append(f"par idempotence F|F <= F: {F!r}")
        if not zf <= F:
            out.append(f"z-fact least: {F!r}")
    for F, Gf in product(facts, repeat=2):
        if not tensor(Gf, F) <= F or not F <= par(Gf, F):
            out.append(f"notimes: {F!r}, {Gf!r}")
        if not par(par(Gf, F), F) <= par(Gf, F):
            out.append(f"contraction: {F!r}, {Gf!r}")
        if is_valid_fact(F) and not is_valid_fact(par(F, Gf)):
            out.append(f"WR: {F!r}, {Gf!r}")
    return out
