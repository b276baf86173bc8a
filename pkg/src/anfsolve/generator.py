"""Seeded random sparse ANF systems.

Randomness comes from SplitMix64 (Steele, Lea and Flood), so a seed gives the
same instance in any language that follows the procedure below:

* ``below(b)`` draws a 64-bit output ``x``, rejects it while
  ``x >= 2**64 - (2**64 % b)`` and returns ``x % b``; ``bit()`` is
  ``below(2)``.
* For each factor: pick ``k`` distinct variables by a partial Fisher-Yates
  shuffle of ``1..n`` (step ``i`` swaps position ``i`` with
  ``i + below(n - i)``) and sort them.  Draw ``bit()`` for the constant term,
  then one ``bit()`` per monomial over those variables of degree ``1..d``,
  visited by degree and then lexicographically.
* A draw with no non-constant monomial is redrawn; so is the constant 0,
  unless ``allow_unsat`` is set.  With a planted point, a factor evaluating
  to 0 there gets its constant term flipped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .anf import AnfPoly, evaluate
from .solver import Formula

_MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        if bound < 1:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            x = self.next()
            if x < limit:
                return x % bound

    def bit(self) -> int:
        return self.below(2)


@dataclass(frozen=True)
class GenSpec:
    num_vars: int
    num_factors: int
    max_vars_per_factor: int
    max_degree: int | None = None
    seed: int = 0
    planted: tuple[int, ...] | None = None
    allow_unsat: bool = False

    def __post_init__(self):
        n, k = self.num_vars, self.max_vars_per_factor
        d = k if self.max_degree is None else self.max_degree
        if n < 1:
            raise ValueError("num_vars must be >= 1")
        if self.num_factors < 0:
            raise ValueError("num_factors must be >= 0")
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= max_vars_per_factor <= num_vars, got k={k}, n={n}")
        if not 1 <= d <= k:
            raise ValueError(f"need 1 <= max_degree <= max_vars_per_factor, got d={d}, k={k}")
        if self.planted is not None:
            if len(self.planted) != n or any(b not in (0, 1) for b in self.planted):
                raise ValueError(f"planted must be {n} bits")
        object.__setattr__(self, "max_degree", d)


def _draw_factor(rng: SplitMix64, spec: GenSpec) -> AnfPoly:
    n, k, d = spec.num_vars, spec.max_vars_per_factor, spec.max_degree
    while True:
        pool = list(range(1, n + 1))
        for i in range(k):
            j = i + rng.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        chosen = sorted(pool[:k])
        monomials: list = [1] if rng.bit() else []
        for deg in range(1, d + 1):
            for combo in itertools.combinations(chosen, deg):
                if rng.bit():
                    monomials.append(combo)
        f = AnfPoly(monomials, n)
        if f.is_constant() and not (f.is_zero() and spec.allow_unsat):
            continue
        if spec.planted is not None and not evaluate(f, spec.planted):
            f = f ^ AnfPoly.one(n)
        return f


def generate_system(spec: GenSpec) -> Formula:
    rng = SplitMix64(spec.seed)
    return Formula([_draw_factor(rng, spec) for _ in range(spec.num_factors)], spec.num_vars)


def random_planted_point(num_vars: int, seed: int) -> tuple[int, ...]:
    """A point drawn from its own stream (seed offset so it differs from the system's)."""
    rng = SplitMix64(seed ^ 0x5DEECE66D)
    return tuple(rng.bit() for _ in range(num_vars))
