from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from conftest import (random_structures, ref_biorth, ref_dot, ref_facts, ref_orth,
                      ref_violations)
from qphase.invariants import check_closure, check_connectives, check_projective
from qphase.models import classical_model, enumerated
from qphase.phase import (Fact, MixedStructureError, QStructure, StructureError, all_facts,
                          biorth, brute_force_fact_masks, dot_set, garbage_products_report,
                          is_fact, is_projective, is_valid_fact, make_fact, neg, one_fact,
                          orth, par, plus, tensor, top_fact, validate, with_, z_fact,
                          zero_fact)


def ix(q, *names):
    return frozenset(q.index(n) for n in names)


def F(q, *names):
    return make_fact(q, names)


class TestValidate:
    def test_worked_examples_valid(self, C1, B1):
        assert validate(C1) == []
        assert validate(B1) == []

    def test_broken_symmetry_names_the_pair(self, C1):
        dot = [list(r) for r in C1.dot]
        ep, eq = C1.index("ep"), C1.index("eq")
        dot[ep][eq] = ep
        q = QStructure(4, 0, dot, C1.garbage, C1.labels)
        vs = validate(q)
        assert any(v.condition == "symmetry" and v.witness == (ep, eq) for v in vs)
        assert {(v.condition, v.witness) for v in vs} == ref_violations(q)

    def test_structural_errors_are_distinct(self):
        with pytest.raises(StructureError):
            QStructure(2, 0, [[0, 1]], set())
        with pytest.raises(StructureError):
            QStructure(2, 0, [[0, 1], [1, 5]], set())
        with pytest.raises(StructureError):
            QStructure(2, 0, [[0, 1], [1, 1]], {3})

    def test_unit_violation(self):
        q = QStructure(2, 0, [[0, 0], [1, 1]], {1})
        assert ("unit", (1,)) in {(v.condition, v.witness) for v in validate(q)}

    @given(st.integers(0, 2 ** 32 - 1))
    @settings(max_examples=60, deadline=None)
    def test_report_matches_triple_scan(self, seed):
        import random
        rng = random.Random(seed)
        n = rng.randint(1, 4)
        dot = [[rng.randrange(n) for _ in range(n)] for _ in range(n)]
        for x in range(n):
            dot[0][x] = dot[x][0] = x
        Z = {x for x in range(n) if rng.random() < 0.5}
        q = QStructure(n, 0, dot, Z)
        assert {(v.condition, v.witness) for v in validate(q)} == ref_violations(q)

    def test_z_products_report(self, C1, B1):
        # z = 1.z with 1 perp z, so the report is empty in every structure
        for q in [C1, B1, *enumerated(2), *enumerated(3)]:
            assert garbage_products_report(q) == frozenset()


class TestOrth:
    def test_examples(self, C1):
        assert orth(C1, []) == frozenset(range(4))
        assert orth(C1, ix(C1, "e1")) == C1.garbage
        assert orth(C1, ix(C1, "ep")) == ix(C1, "e0", "eq")

    def test_biorth_examples(self, C1, B1):
        assert biorth(C1, ix(C1, "e0", "ep")) == ix(C1, "e0", "ep")
        assert biorth(C1, ix(C1, "e0", "ep", "eq")) == frozenset(range(4))
        # the classical characterization only holds for proper subsets of the model set
        assert not is_fact(C1, ix(C1, "e0", "ep", "eq"))
        assert is_fact(B1, ix(B1, "0", "r+"))
        assert biorth(C1, []) == zero_fact(C1).members

    def test_dot_set_examples(self, C1, B1):
        assert dot_set(C1, ix(C1, "e0", "ep"), ix(C1, "e0", "eq")) == ix(C1, "e0")
        assert dot_set(B1, ix(B1, "0", "r0"), ix(B1, "0", "r+")) == ix(B1, "0", "r+")
        assert dot_set(C1, [], ix(C1, "ep")) == frozenset()
        for m in range(16):
            a = frozenset(i for i in range(4) if m >> i & 1)
            assert dot_set(C1, [C1.unit], a) == a

    @pytest.mark.parametrize("idx", range(0, 272, 17))
    def test_against_reference(self, idx):
        q = enumerated(3)[idx]
        for m in range(8):
            a = frozenset(i for i in range(3) if m >> i & 1)
            assert orth(q, a) == ref_orth(q, a)
            assert biorth(q, a) == ref_biorth(q, a)
            for k in range(8):
                b = frozenset(i for i in range(3) if k >> i & 1)
                assert dot_set(q, a, b) == ref_dot(q, a, b)


class TestFacts:
    def test_census(self, C1, B1):
        assert [f.members for f in all_facts(C1)] == [
            ix(C1, "e0"), ix(C1, "ep", "e0"), ix(C1, "eq", "e0"), frozenset(range(4))]
        assert sorted(sorted(B1.label(x) for x in f) for f in all_facts(B1)) == sorted([
            ["0"], ["0", "r0"], ["0", "r1"], ["0", "r+"], ["0", "r-"],
            ["0", "H", "r+", "r-", "r0", "r1"]])
        assert len(all_facts(classical_model(["p", "q"]))) == 16

    def test_closure_matches_brute_force(self, C1, B1):
        for q in [C1, B1, *random_structures(30, sizes=(2, 3, 4, 5, 6))]:
            got = [f.members for f in all_facts(q)]
            assert sorted(got, key=sorted) == sorted(ref_facts(q), key=sorted)
            assert [f.mask for f in all_facts(q)] == brute_force_fact_masks(q)

    def test_zero_is_first_and_least(self, C1, B1):
        for q in [C1, B1, *random_structures(20)]:
            fs = all_facts(q)
            assert fs[0] == zero_fact(q)
            assert all(fs[0] <= f for f in fs)

    def test_make_fact_rejects_non_facts(self, C1):
        with pytest.raises(ValueError):
            make_fact(C1, ["e0", "ep", "eq"])

    def test_closure_suite(self, C1, B1):
        assert check_closure(C1) == []
        assert check_closure(B1) == []


class TestConnectives:
    def test_c1_examples(self, C1):
        a, b = F(C1, "e0", "ep"), F(C1, "e0", "eq")
        assert neg(a) == b
        assert tensor(a, b).members == ix(C1, "e0")
        assert with_(a, b).members == ix(C1, "e0")
        assert plus(a, b) == top_fact(C1)

    def test_b1_nonassociativity(self, B1):
        f, g, h = F(B1, "0", "r0"), F(B1, "0", "r+"), F(B1, "0", "r1")
        assert tensor(tensor(f, g), h).members == ix(B1, "0", "r1")
        assert tensor(f, tensor(g, h)).members == ix(B1, "0")

    def test_b1_half_neutrality(self, B1):
        f = F(B1, "0", "r0")
        assert tensor(f, one_fact(B1)) == top_fact(B1)
        assert tensor(one_fact(B1), f) == f

    def test_constants(self, C1, B1):
        assert z_fact(C1).members == C1.garbage
        assert one_fact(B1) == top_fact(B1)
        assert is_valid_fact(top_fact(C1))
        assert not is_valid_fact(F(C1, "e0", "ep"))
        for q in (C1, B1):
            for f in all_facts(q):
                assert is_valid_fact(par(f, neg(f)))

    def test_mixed_structures_rejected(self, C1, B1):
        with pytest.raises(MixedStructureError):
            tensor(top_fact(C1), top_fact(B1))

    def test_projective_predicate(self, C1, B1):
        assert is_projective(C1) and is_projective(B1)
        q = QStructure(3, 0, [[0, 1, 2], [1, 0, 0], [2, 2, 1]], {1})
        assert validate(q) == []
        assert not is_projective(q)

    def test_results_are_facts(self, B1):
        fs = all_facts(B1)
        for f, g in product(fs, repeat=2):
            for op in (tensor, par, with_, plus):
                assert is_fact(B1, op(f, g).members)


class TestLemmaSuite:
    """Connective laws over whole fact lattices.

    Par does not distribute over with as an equality (only the inclusion
    holds), and dually for tensor over plus; the B1 witness below pins this.
    Every other law in the suite holds everywhere.
    """

    KNOWN = ("dist1 right", "dist1 left", "tensor over plus right", "tensor over plus left")

    def test_dist1_counterexample_in_b1(self, B1):
        f, g, h = F(B1, "0", "r0"), F(B1, "0", "r0"), F(B1, "0", "r1")
        assert par(f, with_(g, h)).members == ix(B1, "0")
        assert with_(par(f, g), par(f, h)).members == ix(B1, "0", "r0")

    def test_c1_clean(self, C1):
        assert check_connectives(C1) == []

    def test_other_laws_hold(self, B1):
        for q in [B1, *random_structures(15, seed=11)]:
            bad = [s for s in check_connectives(q) if not s.startswith(self.KNOWN)]
            assert bad == []


class TestProjectiveSuite:
    """Only one direction of the x.x law follows from absorption.

    In the three-element structure below, 2 is not garbage but 2.2 is, so
    2.2 is orthogonal to the unit while 2 is not. The facts then include
    {1, 2}, whose tensor square collapses to {1}.
    """

    WITNESS = QStructure(3, 0, [[0, 1, 2], [1, 1, 1], [2, 1, 1]], {1})

    def test_worked_models_clean(self, C1, B1):
        assert check_projective(C1) == [] and check_projective(B1) == []

    def test_witness(self):
        q = self.WITNESS
        assert validate(q) == [] and is_projective(q)
        f = make_fact(q, [1, 2])
        assert tensor(f, f).members == {1}
        assert par(f, f) == top_fact(q)
        laws = {s.split(":")[0] for s in check_projective(q)}
        assert laws == {"xx=x converse", "projective A.A", "tensor idempotence F <= F*F",
                        "par idempotence F|F <= F", "contraction"}

    def test_forward_direction_everywhere(self):
        for q in [*random_structures(40, projective=True, seed=12),
                  *(q for q in enumerated(3) if is_projective(q))]:
            bad = [s for s in check_projective(q) if s.startswith((
                "xx=x forward", "xx=x orthogonality", "projective orth", "main_proj",
                "F.F", "tensor idempotence F*F <= F", "par idempotence F <= F|F",
                "notimes", "WR", "z-fact", "one is", "structure"))]
            assert bad == []


def test_fact_repr_uses_labels(C1):
    assert repr(F(C1, "e0", "ep")) == "{ep, e0}"
    assert isinstance(F(C1, "e0"), Fact)
