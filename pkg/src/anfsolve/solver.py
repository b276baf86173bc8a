"""All-solution solver for systems f1 = 1, ..., fm = 1 of ANF equations.

A task holds a prefix term and the system already reduced by it.  Running a
task (one *segment*) picks a pivot factor, generates its orthogonal
implicants and reduces the remaining factors by each one; every reduction
that is not a contradiction becomes a new task.  Tasks share nothing but
immutable values, so they are run from a queue by a pool of workers and the
results are merged as a set.
"""

from __future__ import annotations

import logging
import os
import time
from collections import deque
from concurrent.futures import FIRST_COMPLETED, Executor, ProcessPoolExecutor, ThreadPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .anf import CONTRADICTION, AnfPoly, Term, _Contradiction, cofactor, support
from .implicants import ImplicantSet, OrderPolicy, generate_implicants

log = logging.getLogger(__name__)

PIVOT_POLICIES = ("min-vars", "first", "min-terms")


@dataclass(frozen=True)
class Formula:
    """Product of ANF factors; the empty product is the constant 1."""

    factors: tuple[AnfPoly, ...]
    num_vars: int

    def __init__(self, factors: Iterable[AnfPoly] = (), num_vars: int | None = None):
        factors = tuple(factors)
        top = max((f.support_mask.bit_length() for f in factors), default=0)
        if num_vars is None:
            num_vars = max([top, 1] + [f.num_vars for f in factors])
        elif top > num_vars:
            raise ValueError(f"factor mentions x{top} but num_vars={num_vars}")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "num_vars", num_vars)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __reduce__(self):
        return (Formula, (self.factors, self.num_vars))


@dataclass(frozen=True)
class SolveTask:
    prefix: Term
    formula: Formula
    depth: int = 0


@dataclass
class SolveStats:
    """Segment counts and timings.

    ``segments_total`` counts the root task plus one segment per implicant
    substitution, pruned or not; ``longest_chain`` is the number of segments
    on the deepest root-to-leaf path.
    """

    segments_total: int = 0
    longest_chain: int = 0
    tasks_pruned: int = 0
    wall_time: float = 0.0
    segment_durations: list[float] = field(default_factory=list)
    workers: int = 1

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "segments_total": self.segments_total,
            "longest_chain": self.longest_chain,
            "pruned": self.tasks_pruned,
        }
        if timing:
            out["wall_time"] = self.wall_time
        return out


@dataclass
class SolveResult:
    implicants: ImplicantSet
    stats: SolveStats

    @property
    def satisfiable(self) -> bool:
        return len(self.implicants) > 0


def choose_pivot(formula: Formula | Sequence[AnfPoly], policy: str = "min-vars") -> int:
    """Index of the pivot factor; ties go to the lowest index."""
    factors = list(formula)
    if not factors:
        raise ValueError("cannot choose a pivot from an empty factor list")
    if policy == "first":
        return 0
    if policy == "min-vars":
        return min(range(len(factors)), key=lambda i: (factors[i].support_mask.bit_count(), i))
    if policy == "min-terms":
        return min(range(len(factors)), key=lambda i: (len(factors[i]), i))
    raise ValueError(f"unknown pivot policy {policy!r}; expected one of {PIVOT_POLICIES}")


def reduce_formula(formula: Formula, t: Term) -> Formula | _Contradiction:
    """Cofactor every factor by ``t``; drop ones, stop at the first zero."""
    kept = []
    for f in formula.factors:
        q = cofactor(f, t)
        if q.is_zero():
            return CONTRADICTION
        if not q.is_one():
            kept.append(q)
    return Formula(kept, formula.num_vars)


def dedup_and_sort(results: Iterable[Term], check: bool = __debug__) -> ImplicantSet:
    """Union of task outputs in canonical order (by signed literal tuple)."""
    terms = list(results)
    if check:
        assert len(set(terms)) == len(terms), "duplicate implicants from orthogonal branches"
    return ImplicantSet.from_terms(set(terms))


@dataclass
class _Outcome:
    solutions: list[Term]
    children: list[SolveTask]
    segments: int
    pruned: int
    deepest: int
    duration: float


def _run_segment(task: SolveTask, pivot: str, order: OrderPolicy) -> _Outcome:
    start = time.perf_counter()
    factors = tuple(f for f in task.formula.factors if not f.is_one())
    depth = task.depth
    solutions: list[Term] = []
    children: list[SolveTask] = []
    segments = pruned = 0
    deepest = depth

    if any(f.is_zero() for f in factors):
        pruned = 1
    elif not factors:
        solutions.append(task.prefix)
    elif len(factors) == 1:
        for s in generate_implicants(factors[0], order):
            solutions.append(Term(task.prefix.care | s.care, task.prefix.value | s.value))
    else:
        k = choose_pivot(factors, pivot)
        rest = Formula(factors[:k] + factors[k + 1:], task.formula.num_vars)
        for t in generate_implicants(factors[k], order):
            segments += 1
            deepest = depth + 1
            prefix = Term(task.prefix.care | t.care, task.prefix.value | t.value)
            reduced = reduce_formula(rest, t)
            if reduced is CONTRADICTION:
                pruned += 1
            elif not reduced.factors:
                solutions.append(prefix)
            else:
                children.append(SolveTask(prefix, reduced, depth + 1))
    return _Outcome(solutions, children, segments, pruned, deepest, time.perf_counter() - start)


def _make_executor(workers: int, executor: str) -> Executor:
    if executor == "thread":
        return ThreadPoolExecutor(max_workers=workers)
    if executor == "process":
        return ProcessPoolExecutor(max_workers=workers)
    raise ValueError(f"unknown executor {executor!r}; expected 'thread' or 'process'")


def resolve_workers(workers: int) -> int:
    if workers < 0:
        raise ValueError("worker count must be >= 0")
    return workers or os.cpu_count() or 1


def boolean_solve(
    formula: Formula | Iterable[AnfPoly],
    pivot: str = "min-vars",
    order: OrderPolicy = "index",
    workers: int = 1,
    executor: str = "thread",
    first_solution: bool = False,
) -> SolveResult:
    """All satisfying partial assignments of ``prod(factors) = 1``.

    Returns a pairwise orthogonal set of terms whose expansions are exactly
    the solutions; the set is empty iff the system is unsatisfiable.
    ``workers=0`` uses every CPU.  With ``first_solution`` the search stops
    as soon as one term is found (the stats are then partial).
    """
    if not isinstance(formula, Formula):
        formula = Formula(formula)
    if pivot not in PIVOT_POLICIES:
        raise ValueError(f"unknown pivot policy {pivot!r}; expected one of {PIVOT_POLICIES}")
    workers = resolve_workers(workers)
    stats = SolveStats(workers=workers)
    found: list[Term] = []
    start = time.perf_counter()

    # the root task is itself a segment
    stats.segments_total = 1
    stats.longest_chain = 1

    def absorb(out: _Outcome) -> list[SolveTask]:
        found.extend(out.solutions)
        stats.segments_total += out.segments
        stats.tasks_pruned += out.pruned
        stats.longest_chain = max(stats.longest_chain, out.deepest + 1)
        stats.segment_durations.append(out.duration)
        return out.children

    root = SolveTask(Term(), formula, 0)
    if workers == 1:
        queue = deque([root])
        while queue:
            queue.extend(absorb(_run_segment(queue.popleft(), pivot, order)))
            if first_solution and found:
                break
    else:
        with _make_executor(workers, executor) as pool:
            pending = {pool.submit(_run_segment, root, pivot, order)}
            while pending:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in done:
                    for child in absorb(fut.result()):
                        pending.add(pool.submit(_run_segment, child, pivot, order))
                if first_solution and found:
                    for fut in pending:
                        fut.cancel()
                    break

    if first_solution:
        found = found[:1]
    stats.wall_time = time.perf_counter() - start
    implicants = dedup_and_sort(found)
    implicants = ImplicantSet(implicants.terms, support_of(formula))
    log.debug(
        "solved %d factors: %d implicants, N=%d, N_seq=%d, pruned=%d",
        len(formula), len(implicants), stats.segments_total, stats.longest_chain, stats.tasks_pruned,
    )
    return SolveResult(implicants, stats)


def support_of(formula: Formula) -> tuple[int, ...]:
    mask = 0
    for f in formula.factors:
        mask |= f.support_mask
    return support(AnfPoly.from_masks((mask,), formula.num_vars))

