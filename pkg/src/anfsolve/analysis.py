"""Quantities derived from an orthogonal implicant set and from solver stats.

Model counts and extremal Hamming weights come straight from the compact
representation.  Speedup figures follow Amdahl's law with the sequential
fraction taken as N_seq / N, where N is the number of thread segments and
N_seq the length of the longest chain; all of them are exact fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .anf import Term
from .implicants import first_overlap

DEFAULT_WITNESS_LIMIT = 1000


class NonOrthogonalError(ValueError):
    def __init__(self, a: Term, b: Term):
        super().__init__(f"implicants {a} and {b} are not orthogonal")
        self.pair = (a, b)


class UnsatisfiableError(ValueError):
    pass


def _require_orthogonal(terms: Sequence[Term]) -> None:
    pair = first_overlap(terms)
    if pair is not None:
        raise NonOrthogonalError(*pair)


def count_models(implicants: Iterable[Term], num_vars: int, check: bool = True) -> int:
    """Number of total assignments of ``num_vars`` variables under the set."""
    terms = list(implicants)
    if check:
        _require_orthogonal(terms)
    return sum(1 << (num_vars - len(t)) for t in terms)


@dataclass
class WeightResult:
    weight: int
    terms: list[Term]
    witnesses: list[tuple[int, ...]]
    truncated: bool = False


def extremal_weight_solutions(
    implicants: Iterable[Term],
    num_vars: int,
    mode: str = "min",
    limit: int = DEFAULT_WITNESS_LIMIT,
) -> WeightResult:
    """Minimum or maximum Hamming weight over all solutions.

    A term's lightest completion sets its free variables to 0, its heaviest
    sets them to 1, so every term reaching the extremum has exactly one
    witness at that weight.  At most ``limit`` witnesses are returned.
    """
    if mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
    terms = list(implicants)
    if not terms:
        raise UnsatisfiableError("unsatisfiable, no weight defined")
    _require_orthogonal(terms)

    full = (1 << num_vars) - 1

    def completion(t: Term) -> int:
        return t.value if mode == "min" else t.value | (full & ~t.care)

    weights = [completion(t).bit_count() for t in terms]
    best = min(weights) if mode == "min" else max(weights)
    winners = [t for t, w in zip(terms, weights) if w == best]
    shown = winners[:limit]
    witnesses = [tuple((completion(t) >> i) & 1 for i in range(num_vars)) for t in shown]
    return WeightResult(best, winners, witnesses, truncated=len(winners) > limit)


def _check_counts(n: int, n_seq: int) -> None:
    if n_seq < 1 or n < n_seq:
        raise ValueError(f"need N >= N_seq >= 1, got N={n}, N_seq={n_seq}")


def parallel_fraction(n: int, n_seq: int) -> Fraction:
    _check_counts(n, n_seq)
    return Fraction(n - n_seq, n)


def max_speedup(n: int, n_seq: int) -> Fraction:
    _check_counts(n, n_seq)
    return Fraction(n, n_seq)


def amdahl_speedup(n: int, n_seq: int, procs: int | Fraction | float) -> Fraction:
    """S(P) = P (N/N_seq) / (N/N_seq + P - 1); ``procs=math.inf`` gives N/N_seq."""
    _check_counts(n, n_seq)
    if procs == math.inf:
        return max_speedup(n, n_seq)
    p = Fraction(procs)
    if p < 1:
        raise ValueError(f"need P >= 1, got {procs}")
    r = Fraction(n, n_seq)
    return p * r / (r + p - 1)


def critical_speedup(procs: int | Fraction) -> Fraction:
    """Speedup at P = N/N_seq processors: P^2 / (P^2 - (P-1)^2)."""
    p = Fraction(procs)
    if p < 1:
        raise ValueError(f"need P >= 1, got {procs}")
    return p * p / (p * p - (p - 1) ** 2)


@dataclass
class SpeedupReport:
    segments_total: int
    longest_chain: int
    max_speedup: Fraction
    parallel_fraction: Fraction
    table: dict[int, Fraction] = field(default_factory=dict)
    critical_speedup: Fraction | None = None

    def as_dict(self) -> dict:
        return {
            "segments_total": self.segments_total,
            "longest_chain": self.longest_chain,
            "max_speedup": _frac(self.max_speedup),
            "parallel_fraction": _frac(self.parallel_fraction),
            "speedup": {str(p): _frac(s) for p, s in self.table.items()},
            "critical_speedup": None if self.critical_speedup is None else _frac(self.critical_speedup),
        }

    def render(self) -> str:
        lines = [
            f"N (segments)      {self.segments_total}",
            f"N_seq (longest)   {self.longest_chain}",
            f"S = N/N_seq       {self.max_speedup} ~ {float(self.max_speedup):.4f}",
            f"f_par             {self.parallel_fraction} ~ {float(self.parallel_fraction):.4f}",
        ]
        if self.critical_speedup is not None:
            lines.append(f"S_crit            {self.critical_speedup} ~ {float(self.critical_speedup):.4f}")
        lines.append("P        S(P)")
        for p, s in self.table.items():
            lines.append(f"{p:<8d} {str(s):<14s} ~ {float(s):.4f}")
        return "\n".join(lines)


def _frac(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator, "value": float(x)}


def speedup_report(n: int, n_seq: int, procs: Iterable[int] = (1, 2, 4, 8, 16)) -> SpeedupReport:
    """Amdahl table for the given processor counts, plus S_crit at P = N/N_seq."""
    s = max_speedup(n, n_seq)
    crit = critical_speedup(s)
    table = {int(p): amdahl_speedup(n, n_seq, p) for p in procs}
    return SpeedupReport(n, n_seq, s, parallel_fraction(n, n_seq), table, crit)
