import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from qphase.linalg import (DimensionError, contains, full_space, inner, is_orthogonal,
                           is_zero, ortho_complement, parse_subspace, parse_vector,
                           project_subspace, project_vector, random_subspace, span,
                           subspace_meet, subspace_sum, vec, zero_space)


def sympy_rref(vectors, d):
    """Canonical basis via sympy, as an independent oracle."""
    if not vectors:
        return ()
    m, pivots = sympy.Matrix([list(v) for v in vectors]).rref()
    rows = []
    for i in range(len(pivots)):
        rows.append(tuple(Fraction(int(x.p), int(x.q)) for x in m.row(i)))
    return tuple(rows)


def sympy_project(v, basis):
    if not basis:
        return tuple(Fraction(0) for _ in v)
    B = sympy.Matrix([list(b) for b in basis]).T
    p = B * (B.T * B).inv() * B.T * sympy.Matrix(list(v))
    return tuple(Fraction(int(x.p), int(x.q)) for x in p)


def subspaces(d, seed, count):
    rng = random.Random(seed)
    return [random_subspace(d, rng) for _ in range(count)]


class TestSpan:
    def test_examples(self):
        assert span([(1, 1), (2, 2)]).basis == (vec((1, 1)),)
        assert is_zero(span([], 3))
        assert span([(1, 0), (0, 1)]) == full_space(2)

    def test_mixed_dimensions(self):
        with pytest.raises(DimensionError):
            span([(1, 0), (1, 0, 0)])

    @given(st.lists(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=9),
                             min_size=3, max_size=3), max_size=4))
    @settings(max_examples=80, deadline=None)
    def test_canonical_form_matches_sympy(self, rows):
        assert span(rows, 3).basis == sympy_rref(rows, 3)

    def test_canonical_equality(self):
        for s in subspaces(4, 1, 50):
            assert span(s.basis, 4) == s

    def test_parse(self):
        assert parse_vector("1/2,-3,0") == (Fraction(1, 2), Fraction(-3), Fraction(0))
        assert parse_subspace("1,0;0,1") == full_space(2)
        assert str(span([(2, 0)])) == "span[(1,0)]"
        assert str(zero_space(2)) == "{0}"


class TestProjection:
    def test_examples(self):
        assert project_vector((1, 1), span([(1, 0)])) == vec((1, 0))
        assert project_vector((1, 0), span([(0, 1)])) == vec((0, 0))
        assert project_vector((3, -1), full_space(2)) == vec((3, -1))
        assert project_subspace(span([(1, 1)]), span([(1, 0)])) == span([(1, 0)])

    def test_against_sympy(self):
        rng = random.Random(5)
        for s in subspaces(4, 2, 40):
            v = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(4)]
            p = project_vector(v, s)
            assert p == sympy_project(v, s.basis)
            assert contains(s, p)
            r = [a - b for a, b in zip(v, p)]
            assert all(inner(r, b) == 0 for b in s.basis)

    def test_neutral_and_zero(self):
        for a in subspaces(3, 3, 30):
            assert project_subspace(a, full_space(3)) == a
            assert project_subspace(full_space(3), a) == a
            assert is_zero(project_subspace(a, zero_space(3)))
            assert is_zero(project_subspace(zero_space(3), a))

    def test_idempotent_on_target(self):
        ss = subspaces(4, 4, 60)
        for a, b in zip(ss, ss[1:]):
            p = project_subspace(a, b)
            assert project_subspace(p, b) == p
            assert subspace_meet(p, b) == p

    def test_nonassociativity_witness(self):
        A, B, C = span([(1, 0)]), span([(1, 1)]), span([(0, 1)])
        assert project_subspace(project_subspace(A, B), C) == span([(0, 1)])
        assert is_zero(project_subspace(A, project_subspace(B, C)))


class TestComplement:
    def test_examples(self):
        assert ortho_complement(span([(1, 0)])) == span([(0, 1)])
        assert ortho_complement(zero_space(2)) == full_space(2)
        a = span([(1, 2, 3)])
        assert ortho_complement(ortho_complement(a)) == a

    def test_rank_and_sum(self):
        for a in subspaces(3, 6, 40):
            c = ortho_complement(a)
            assert a.rank + c.rank == 3
            assert subspace_sum(a, c) == full_space(3)
            assert is_orthogonal(a, c)
            assert ortho_complement(c) == a

    def test_meet(self):
        assert is_zero(subspace_meet(span([(1, 0)]), span([(0, 1)])))
        x, y = span([(1, 0, 0), (0, 1, 0)]), span([(0, 1, 0), (0, 0, 1)])
        assert subspace_meet(x, y) == span([(0, 1, 0)])

    def test_orthogonality_via_projection(self):
        ss = subspaces(4, 8, 101)
        for a, b in zip(ss, ss[1:]):
            assert is_orthogonal(a, b) == is_zero(project_subspace(a, b))


class TestBabyLemma:
    def test_both_items(self):
        ss = subspaces(4, 9, 300)
        for a, b, c in zip(ss, ss[1:], ss[2:]):
            assert is_zero(project_subspace(a, b)) == is_zero(project_subspace(b, a))
            lhs = is_zero(project_subspace(project_subspace(a, b), c))
            rhs = is_zero(project_subspace(a, project_subspace(c, b)))
            assert lhs == rhs

    def test_sampler_shape(self):
        rng = random.Random(0)
        ranks = [random_subspace(3, rng).rank for _ in range(400)]
        assert set(ranks) == {0, 1, 2, 3}
        assert all(abs(ranks.count(r) - 100) < 40 for r in range(4))
