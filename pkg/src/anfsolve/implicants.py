"""Complete sets of pairwise orthogonal implicants of a single ANF function.

The function is expanded over an orthonormal set of terms in its variables.
For each ON term ``t`` the cofactor ``f/t`` is either 0 (``t`` is dropped), 1
(``t`` is an implicant) or a function of the remaining variables, whose own
implicants ``s`` give the implicants ``t*s`` of ``f``.  Because every level
uses an orthonormal set, the resulting terms are pairwise orthogonal and
together cover exactly the satisfying assignments of ``f``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence, Union

from .anf import (
    AnfPoly,
    Term,
    cofactor,
    evaluate,
    on_set,
    serialize_term,
    support,
    term_product,
    variable_frequencies,
    CONTRADICTION,
)

OrderPolicy = Union[str, Callable[[AnfPoly], Sequence[int]]]

ORDER_POLICIES = ("index", "frequency")

DEFAULT_EXHAUSTIVE_LIMIT = 20


@dataclass(frozen=True)
class ImplicantSet:
    """Canonically sorted, pairwise orthogonal terms of some function."""

    terms: tuple[Term, ...]
    ambient_vars: tuple[int, ...] = ()

    @classmethod
    def from_terms(cls, terms, ambient_vars: Sequence[int] = ()) -> ImplicantSet:
        return cls(tuple(sorted(terms, key=Term.sort_key)), tuple(ambient_vars))

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, t: object) -> bool:
        return t in self.terms

    def literals(self) -> list[list[int]]:
        return [list(t.literals) for t in self.terms]

    def __str__(self) -> str:
        return " + ".join(serialize_term(t) for t in self.terms) if self.terms else "0"


def variable_order(f: AnfPoly, policy: OrderPolicy = "index") -> tuple[int, ...]:
    """Order in which ``f``'s variables enter the ON expansion.

    ``index`` is ascending; ``frequency`` puts variables that occur in more
    monomials first (ties by index).  A callable policy is used as is.
    """
    if callable(policy):
        return tuple(policy(f))
    if policy == "index":
        return support(f)
    if policy == "frequency":
        counts = variable_frequencies(f)
        return tuple(sorted(counts, key=lambda v: (-counts[v], v)))
    raise ValueError(f"unknown ordering policy {policy!r}; expected one of {ORDER_POLICIES}")


def generate_implicants(f: AnfPoly, order: OrderPolicy = "index") -> ImplicantSet:
    ambient = support(f)
    if f.is_zero():
        return ImplicantSet((), ambient)
    if f.is_one():
        return ImplicantSet((Term(),), ambient)

    found: list[Term] = []
    # explicit stack in place of recursion: (prefix term, cofactor of f by prefix)
    stack: list[tuple[Term, AnfPoly]] = [(Term(), f)]
    while stack:
        prefix, q = stack.pop()
        for t in on_set(variable_order(q, order)):
            r = cofactor(q, t)
            if r.is_zero():
                continue
            # t only binds variables of q, which are free in prefix
            pt = Term(prefix.care | t.care, prefix.value | t.value)
            if r.is_one():
                found.append(pt)
            else:
                stack.append((pt, r))
    return ImplicantSet.from_terms(found, ambient)


@dataclass
class Verdict:
    """Outcome of a check.  ``witness`` is whatever shows the failure."""

    ok: bool
    invariant: str | None = None
    witness: object = None
    partial: bool = False
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def first_overlap(terms: Sequence[Term]) -> tuple[Term, Term] | None:
    """First pair of terms whose product is not a contradiction."""
    for a, b in itertools.combinations(terms, 2):
        if term_product(a, b) is not CONTRADICTION:
            return a, b
    return None


def verify_implicant_set(
    f: AnfPoly, implicants, limit: int = DEFAULT_EXHAUSTIVE_LIMIT
) -> Verdict:
    """Check the implicant, orthogonality and completeness invariants.

    Completeness is checked over all assignments of ``support(f)`` and is
    skipped (``partial=True``) when the support exceeds ``limit`` variables.
    """
    terms = list(implicants)
    for t in terms:
        q = cofactor(f, t)
        if not q.is_one():
            return Verdict(False, "implicant", t, message=f"f/{t} = {q}, not 1")
    pair = first_overlap(terms)
    if pair is not None:
        return Verdict(False, "orthogonality", pair, message=f"{pair[0]} and {pair[1]} overlap")

    variables = support(f)
    for t in terms:
        variables = tuple(sorted(set(variables) | set(t.variables)))
    if len(variables) > limit:
        return Verdict(
            True,
            partial=True,
            message=f"completeness not checked: {len(variables)} variables exceed limit {limit}",
        )
    for bits in itertools.product((0, 1), repeat=len(variables)):
        a = dict(zip(variables, bits))
        covered = any(t.evaluate(a) for t in terms)
        if covered != bool(evaluate(f, a)):
            return Verdict(
                False,
                "completeness",
                a,
                message=f"f={evaluate(f, a)} but implicants give {int(covered)} at {a}",
            )
    return Verdict(True)
