"""
Counting solutions and extremal weights
=======================================

Orthogonal terms never share a point, so the number of solutions is a sum of
powers of two and never needs the solutions written out.
"""

from anfsolve import GenSpec, boolean_solve, count_models, extremal_weight_solutions, generate_system
from anfsolve.generator import random_planted_point

n = 40
planted = random_planted_point(n, seed=11)
system = generate_system(GenSpec(n, 30, 3, seed=11, planted=planted))
res = boolean_solve(system)
print(f"{len(res.implicants)} implicants cover {count_models(res.implicants, n)} of 2^{n} points")

###############################################################################
# The lightest completion of a term sets its free variables to 0, the
# heaviest sets them to 1.

lo = extremal_weight_solutions(res.implicants, n, "min")
hi = extremal_weight_solutions(res.implicants, n, "max")
print("min weight", lo.weight, "e.g.", "".join(map(str, lo.witnesses[0])))
print("max weight", hi.weight, "e.g.", "".join(map(str, hi.witnesses[0])))
