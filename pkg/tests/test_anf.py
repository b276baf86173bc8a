import itertools

import pytest
from hypothesis import given, settings, strategies as st

from anfsolve.anf import (
    CONTRADICTION,
    AnfParseError,
    AnfPoly,
    IncompleteAssignmentError,
    Term,
    cofactor,
    evaluate,
    on_set,
    parse_anf,
    parse_term,
    serialize_anf,
    serialize_term,
    support,
    term_product,
)

from conftest import assignments, polys, terms


def brute_eval(monomials, a):
    # independent of the bitmask path: XOR of ANDs over explicit tuples
    return sum(all(a[v] for v in mono) for mono in monomials) % 2


class TestEvaluate:
    def test_linear_plus_quadratic(self):
        f = AnfPoly([[1], [2], [2, 3]])
        assert evaluate(f, {1: 1, 2: 0, 3: 0}) == 1

    def test_zero_function(self):
        assert evaluate(AnfPoly.zero(3), {1: 1, 2: 1, 3: 1}) == 0
        assert evaluate(AnfPoly.zero(3), {}) == 0

    def test_all_ones_cancel(self):
        f = parse_anf("[1,[1],[3],[1,2],[2,3],[1,2,3]]")
        assert evaluate(f, {1: 1, 2: 1, 3: 1}) == 0

    def test_sequence_assignment(self):
        f = AnfPoly([[1], [2], [2, 3]])
        assert evaluate(f, (1, 0, 0)) == 1
        assert evaluate(f, (0, 1, 1)) == 0

    def test_unassigned_support_variable(self):
        with pytest.raises(IncompleteAssignmentError):
            evaluate(AnfPoly([[1], [2]]), {1: 1})
        with pytest.raises(IncompleteAssignmentError):
            evaluate(AnfPoly([[3]]), (1, 1))

    @given(polys())
    def test_matches_explicit_sum(self, f):
        for a in assignments(range(1, 7)):
            assert evaluate(f, a) == brute_eval(f.monomials, a)


class TestSupport:
    def test_basic(self):
        assert support(AnfPoly([[1], [2], [2, 3]])) == (1, 2, 3)

    def test_constant(self):
        assert support(AnfPoly.one(5)) == ()
        assert support(AnfPoly.zero(5)) == ()

    def test_paper_notation_example(self):
        assert support(parse_anf("[[4],[1,3],[2,4],[1,3,4],[2,3,4]]")) == (1, 2, 3, 4)


class TestCofactor:
    def test_bind_first_variable(self):
        assert cofactor(parse_anf("[[1],[2],[2,3]]"), parse_term("(1)")) == parse_anf("[1,[2],[2,3]]")

    def test_rejected_implicant_gives_zero(self):
        assert cofactor(parse_anf("[[2],[3],[3,4]]"), parse_term("(1,-2,-3)")).is_zero()

    def test_tautology_is_identity(self):
        f = parse_anf("[1,[1],[3],[1,2],[2,3],[1,2,3]]")
        assert cofactor(f, Term()) == f

    def test_becomes_one(self):
        assert cofactor(parse_anf("[[2],[3],[3,4]]"), parse_term("(-1,2,-3)")).is_one()

    def test_ignores_unrelated_bindings(self):
        f = parse_anf("[[2],[2,3]]")
        assert cofactor(f, parse_term("(1,-4)")) == f

    def test_result_support_disjoint_from_term(self):
        f = parse_anf("[[1,2],[2,3],[3,4],[1]]")
        t = parse_term("(2,-4)")
        assert not set(support(cofactor(f, t))) & set(t.variables)

    @settings(max_examples=200)
    @given(polys(), terms())
    def test_soundness(self, f, t):
        q = cofactor(f, t)
        free = [v for v in support(f) if v not in t.variables]
        for a in assignments(free):
            full = {**{v: 0 for v in range(1, 7)}, **a, **t.as_dict()}
            assert evaluate(q, {**{v: 0 for v in range(1, 7)}, **a}) == evaluate(f, full)

    @settings(max_examples=200)
    @given(polys(), terms(), terms())
    def test_composition(self, f, t1, t2):
        prod = term_product(t1, t2)
        if prod is CONTRADICTION:
            return
        assert cofactor(cofactor(f, t1), t2) == cofactor(f, prod)


class TestTermProduct:
    def test_consistent_union(self):
        assert term_product(parse_term("(1,2,-3)"), parse_term("(2,-3,4)")) == parse_term("(1,2,-3,4)")

    def test_opposition(self):
        assert term_product(parse_term("(1,-3,4)"), parse_term("(2,3)")) is CONTRADICTION

    def test_unit(self):
        t = parse_term("(1,-5)")
        assert term_product(t, Term()) == t
        assert term_product(Term(), t) == t

    def test_tautology_is_truthy(self):
        assert Term()
        assert not CONTRADICTION

    @given(terms(), terms())
    def test_contradiction_iff_opposite_binding(self, t1, t2):
        d1, d2 = t1.as_dict(), t2.as_dict()
        clash = any(d1[v] != d2[v] for v in d1.keys() & d2.keys())
        assert (term_product(t1, t2) is CONTRADICTION) == clash


class TestOnSet:
    def test_four_variables(self):
        got = [serialize_term(t) for t in on_set([1, 2, 3, 4])]
        assert got == ["(1)", "(-1,2)", "(-1,-2,3)", "(-1,-2,-3,4)", "(-1,-2,-3,-4)"]

    def test_three_variables(self):
        got = [serialize_term(t) for t in on_set([2, 3, 4])]
        assert got == ["(2)", "(-2,3)", "(-2,-3,4)", "(-2,-3,-4)"]

    def test_single(self):
        assert [serialize_term(t) for t in on_set([7])] == ["(7)", "(-7)"]

    def test_follows_given_order(self):
        assert [serialize_term(t) for t in on_set([3, 1])] == ["(3)", "(1,-3)", "(-1,-3)"]

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            on_set([])

    def test_duplicates_rejected(self):
        with pytest.raises(ValueError):
            on_set([1, 1])

    @given(st.lists(st.integers(1, 10), min_size=1, max_size=10, unique=True))
    def test_partition(self, variables):
        ts = on_set(variables).terms
        assert len(ts) == len(variables) + 1
        for a, b in itertools.combinations(ts, 2):
            assert term_product(a, b) is CONTRADICTION
        for a in assignments(variables):
            assert sum(t.evaluate(a) for t in ts) == 1


class TestText:
    def test_parse_with_constant(self):
        f = parse_anf("[1,[1],[3],[1,2],[2,3],[1,2,3]]")
        assert f.monomials == ((), (1,), (3,), (1, 2), (2, 3), (1, 2, 3))

    def test_parse_paper_second(self):
        f = parse_anf("[[4],[1,3],[2,4],[1,3,4],[2,3,4]]")
        assert f.monomials == ((4,), (1, 3), (2, 4), (1, 3, 4), (2, 3, 4))

    def test_empty_is_zero(self):
        assert parse_anf("[]").is_zero()

    def test_constant_spellings(self):
        assert parse_anf("[1]") == parse_anf("[[]]") == AnfPoly.one()
        assert serialize_anf(parse_anf("[ [ ] , [2] ]")) == "[1,[2]]"

    def test_canonical_serialization(self):
        assert serialize_anf(parse_anf("[[2,3], [1], 1, [3,1]]")) == "[1,[1],[1,3],[2,3]]"

    def test_repeated_monomials_cancel(self):
        assert parse_anf("[[1],[2],[1]]") == parse_anf("[[2]]")

    @pytest.mark.parametrize(
        "text, pos",
        [("[[1],[2]", 8), ("[[0]]", 2), ("[[1,1]]", 4), ("[[1],[-2]]", 6), ("[2]", 1), ("[[1]] x", 6), ("[[1],,]", 5)],
    )
    def test_parse_errors(self, text, pos):
        with pytest.raises(AnfParseError) as exc:
            parse_anf(text)
        assert exc.value.position == pos

    def test_terms(self):
        assert parse_term("(1,2,-3,4)").as_dict() == {1: 1, 2: 1, 3: 0, 4: 1}
        assert parse_term("()") == Term()
        assert parse_term(" ( -1 , 2,-3 ) ").as_dict() == {1: 0, 2: 1, 3: 0}
        assert serialize_term(parse_term("(4,-1)")) == "(-1,4)"

    @pytest.mark.parametrize("text", ["(0)", "(1,-1)", "(2,2)", "(1", "1,2)", "(a)"])
    def test_term_errors(self, text):
        with pytest.raises(AnfParseError):
            parse_term(text)

    @given(polys(max_vars=9, max_monomials=20))
    def test_anf_round_trip(self, f):
        assert parse_anf(serialize_anf(f)) == f

    @given(terms(max_vars=9))
    def test_term_round_trip(self, t):
        assert parse_term(serialize_term(t)) == t


class TestXor:
    @given(polys())
    def test_self_cancels(self, f):
        assert (f ^ f).is_zero()

    @given(polys(), st.integers(0, 63))
    def test_double_add_restores(self, f, mask):
        m = AnfPoly.from_masks([mask], 6)
        assert (f ^ m) ^ m == f

    def test_num_vars_checked(self):
        with pytest.raises(ValueError):
            AnfPoly([[5]], num_vars=3)
