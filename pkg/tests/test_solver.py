import pytest
from hypothesis import given, settings, strategies as st

from anfsolve.anf import CONTRADICTION, AnfPoly, Term, cofactor, parse_anf, parse_term
from anfsolve.generator import GenSpec, generate_system
from anfsolve.implicants import first_overlap, generate_implicants
from anfsolve.oracle import brute_force_solutions, expand_implicants
from anfsolve.solver import Formula, boolean_solve, choose_pivot, dedup_and_sort, reduce_formula

from conftest import EXAMPLE_B_SOLUTIONS, polys


def test_four_factor_system(example_b):
    res = boolean_solve(example_b)
    assert [t.literals for t in res.implicants] == EXAMPLE_B_SOLUTIONS


def test_four_factor_stats(example_b):
    # root + 4 pivot implicants of f1 + one follow-up segment for each of the 3 survivors
    stats = boolean_solve(example_b).stats
    assert (stats.segments_total, stats.longest_chain, stats.tasks_pruned) == (8, 3, 1)


def test_zero_factor():
    res = boolean_solve(Formula([AnfPoly([[1]]), AnfPoly.zero(2)], 2))
    assert len(res.implicants) == 0 and not res.satisfiable


def test_single_factor(example_a):
    assert boolean_solve(Formula([example_a])).implicants.terms == generate_implicants(example_a).terms


def test_xor_and_conflict():
    # x1 + x2 = 1 and x1 x2 = 1 cannot both hold (checked on all 4 points)
    f = Formula([AnfPoly([[1], [2]]), AnfPoly([[1, 2]])])
    assert len(brute_force_solutions(f)) == 0
    assert list(boolean_solve(f).implicants) == []


def test_empty_formula_is_tautology():
    res = boolean_solve(Formula([], 3))
    assert list(res.implicants) == [Term()]
    assert list(boolean_solve(Formula([AnfPoly.one(3)] * 2, 3)).implicants) == [Term()]


def test_unmentioned_variables_stay_free():
    res = boolean_solve(Formula([AnfPoly([[2]])], 5))
    assert [t.literals for t in res.implicants] == [(2,)]


class TestReduce:
    def test_paper_thread(self, example_b):
        rest = Formula(example_b.factors[1:], 4)
        got = reduce_formula(rest, parse_term("(-1,2,-3)"))
        assert list(got.factors) == [parse_anf("[[4]]"), parse_anf("[[4]]")]

    def test_paper_rejection(self, example_b):
        rest = Formula(example_b.factors[1:], 4)
        assert reduce_formula(rest, parse_term("(1,-2,-3)")) is CONTRADICTION

    def test_tautology_drops_ones(self, example_b):
        f = Formula(list(example_b.factors) + [AnfPoly.one(4)], 4)
        assert reduce_formula(f, Term()).factors == example_b.factors


class TestPivot:
    def _formula(self, sizes):
        return Formula([AnfPoly([list(range(1, s + 1))]) for s in sizes])

    def test_unique_minimum(self):
        assert choose_pivot(self._formula([3, 2, 4])) == 1

    def test_tie_lowest_index(self):
        assert choose_pivot(self._formula([2, 2, 4])) == 0

    def test_first(self):
        assert choose_pivot(self._formula([3, 2, 4]), "first") == 0

    def test_min_terms(self):
        f = Formula([parse_anf("[[1],[2],[3]]"), parse_anf("[[1,2,3,4]]"), parse_anf("[[5],[6]]")])
        assert choose_pivot(f, "min-terms") == 1
        assert choose_pivot(f, "min-vars") == 2

    def test_empty(self):
        with pytest.raises(ValueError):
            choose_pivot(Formula([], 2))

    def test_unknown_policy(self, example_b):
        with pytest.raises(ValueError):
            boolean_solve(example_b, pivot="largest")


class TestDedupSort:
    def test_sorted(self):
        ts = [parse_term(s) for s in ["(1,2,3,4)", "(-1,2,-3,4)", "(1,-2,3,-4)"]]
        assert [t.literals for t in dedup_and_sort(ts)] == EXAMPLE_B_SOLUTIONS

    def test_trivial(self):
        assert list(dedup_and_sort([])) == []
        assert list(dedup_and_sort([Term()])) == [Term()]

    def test_duplicates_flagged(self):
        with pytest.raises(AssertionError):
            dedup_and_sort([Term(), Term()], check=True)


def _small_systems():
    @st.composite
    def build(draw):
        n = draw(st.integers(2, 8))
        m = draw(st.integers(1, 6))
        factors = [draw(polys(max_vars=n, max_monomials=6)) for _ in range(m)]
        return Formula(factors, n)

    return build()


@settings(max_examples=150, deadline=None)
@given(_small_systems())
def test_matches_brute_force(formula):
    res = boolean_solve(formula)
    terms = list(res.implicants)
    assert first_overlap(terms) is None
    for t in terms:
        for f in formula.factors:
            assert cofactor(f, t).is_one()
    assert expand_implicants(terms, formula.num_vars) == brute_force_solutions(formula)


@settings(max_examples=60, deadline=None)
@given(_small_systems(), st.sampled_from(["min-vars", "first", "min-terms"]), st.sampled_from(["index", "frequency"]))
def test_policies_agree_on_solutions(formula, pivot, order):
    res = boolean_solve(formula, pivot=pivot, order=order)
    assert expand_implicants(res.implicants, formula.num_vars) == brute_force_solutions(formula)


@settings(max_examples=60, deadline=None)
@given(_small_systems())
def test_chain_bounds(formula):
    s = boolean_solve(formula).stats
    assert 1 <= s.longest_chain <= s.segments_total
    assert s.longest_chain <= formula.num_vars + 1


@pytest.mark.parametrize("workers", [2, 3])
def test_worker_count_independent(workers):
    for seed in range(5):
        f = generate_system(GenSpec(12, 10, 4, seed=seed))
        a, b = boolean_solve(f), boolean_solve(f, workers=workers)
        assert a.implicants == b.implicants
        assert a.stats.segments_total == b.stats.segments_total
        assert a.stats.longest_chain == b.stats.longest_chain


def test_process_pool(example_b):
    res = boolean_solve(example_b, workers=2, executor="process")
    assert [t.literals for t in res.implicants] == EXAMPLE_B_SOLUTIONS


def test_first_solution(example_b):
    res = boolean_solve(example_b, first_solution=True)
    assert len(res.implicants) == 1
    assert res.implicants.terms[0].literals in EXAMPLE_B_SOLUTIONS
    unsat = Formula([AnfPoly([[1], [2]]), AnfPoly([[1, 2]])])
    assert len(boolean_solve(unsat, first_solution=True).implicants) == 0


def test_deep_system_no_recursion_limit():
    # x_i + x_{i+1} = 1 chain over 1100 variables has exactly two solutions
    n = 1100
    f = Formula([AnfPoly([[i], [i + 1]], n) for i in range(1, n)], n)
    res = boolean_solve(f, pivot="first")
    assert len(res.implicants) == 2
    assert res.stats.longest_chain <= n + 1
