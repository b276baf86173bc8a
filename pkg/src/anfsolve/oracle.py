"""Brute-force reference semantics.

Nothing here uses cofactoring or the solver; systems are evaluated directly
on every point of {0,1}^n with numpy, so agreement with the solver is an
independent check.  Points are stored as integers with bit ``i - 1`` holding
x_i and shown as bit-vectors with x1 first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .anf import AnfPoly, Term
from .implicants import Verdict

DEFAULT_LIMIT = 24
_CHUNK_BITS = 20


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class SolutionSet:
    num_vars: int
    points: frozenset[int]

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, item) -> bool:
        if isinstance(item, int):
            return item in self.points
        return point_from_bits(item) in self.points

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.bitvectors())

    def bitvectors(self) -> list[tuple[int, ...]]:
        return sorted(bits_from_point(p, self.num_vars) for p in self.points)


def bits_from_point(point: int, num_vars: int) -> tuple[int, ...]:
    return tuple((point >> i) & 1 for i in range(num_vars))


def point_from_bits(bits: Iterable[int]) -> int:
    point = 0
    for i, b in enumerate(bits):
        if b:
            point |= 1 << i
    return point


def _check_limit(num_vars: int, limit: int) -> None:
    if num_vars > limit:
        raise OracleLimitError(
            f"exhaustive enumeration over {num_vars} variables refused (limit {limit})"
        )


def _factor_values(f: AnfPoly, points: np.ndarray) -> np.ndarray:
    acc = np.zeros(points.shape, dtype=bool)
    for mono in f.monomials:
        prod = np.ones(points.shape, dtype=bool)
        for v in mono:
            prod &= ((points >> (v - 1)) & 1).astype(bool)
        acc ^= prod
    return acc


def brute_force_solutions(formula, num_vars: int | None = None, limit: int = DEFAULT_LIMIT) -> SolutionSet:
    """Every point of {0,1}^n at which all factors evaluate to 1."""
    factors = list(formula)
    if num_vars is None:
        num_vars = formula.num_vars
    _check_limit(num_vars, limit)
    total = 1 << num_vars
    chunk = 1 << _CHUNK_BITS
    found: list[np.ndarray] = []
    for lo in range(0, total, chunk):
        points = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
        ok = np.ones(points.shape, dtype=bool)
        for f in factors:
            ok &= _factor_values(f, points)
            if not ok.any():
                break
        found.append(points[ok])
    return SolutionSet(num_vars, frozenset(int(p) for arr in found for p in arr))


def _submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def expand_term(t: Term, num_vars: int) -> Iterator[int]:
    free = ((1 << num_vars) - 1) & ~t.care
    for sub in _submasks(free):
        yield t.value | sub


def expand_implicants(implicants: Iterable[Term], num_vars: int, check_disjoint: bool = False) -> SolutionSet:
    """All total assignments lying under some term."""
    points: set[int] = set()
    expected = 0
    for t in implicants:
        if t.care >> num_vars:
            raise ValueError(f"term {t} mentions variables beyond num_vars={num_vars}")
        expected += 1 << (num_vars - len(t))
        points.update(expand_term(t, num_vars))
    if check_disjoint and expected != len(points):
        raise AssertionError(f"terms overlap: {expected} expansions but {len(points)} distinct points")
    return SolutionSet(num_vars, frozenset(points))


def check_equivalence(formula, implicants, num_vars: int | None = None, limit: int = DEFAULT_LIMIT) -> Verdict:
    """Compare the expansion of ``implicants`` with brute force on ``formula``."""
    if num_vars is None:
        num_vars = formula.num_vars
    _check_limit(num_vars, limit)
    truth = brute_force_solutions(formula, num_vars, limit)
    claimed = expand_implicants(implicants, num_vars)
    missing = truth.points - claimed.points
    if missing:
        p = min(missing)
        return Verdict(False, "completeness", bits_from_point(p, num_vars),
                       message="solution not covered by any implicant")
    extra = claimed.points - truth.points
    if extra:
        p = min(extra)
        return Verdict(False, "soundness", bits_from_point(p, num_vars),
                       message="implicant covers a non-solution")
    return Verdict(True, message=f"{len(truth)} solutions agree")
