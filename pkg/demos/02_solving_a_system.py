"""
All solutions of a system of equations
======================================

Four equations f_i = 1 in four variables.  The solver picks a pivot factor,
substitutes each of its implicants into the other factors, and keeps going
on whatever survives.
"""

from anfsolve import Formula, boolean_solve, brute_force_solutions, check_equivalence, parse_anf

system = Formula([parse_anf(s) for s in ["[[1],[2],[2,3]]", "[[2],[3],[3,4]]",
                                          "[[3],[4],[4,1]]", "[[4],[1],[1,2]]"]], 4)
result = boolean_solve(system)
print("solutions:", result.implicants)
print("stats:", result.stats.as_dict(timing=False))

###############################################################################
# Brute force over all 16 points agrees.

print("brute force:", brute_force_solutions(system).bitvectors())
print("equivalent:", check_equivalence(system, result.implicants).ok)

###############################################################################
# Inconsistent equations give the empty set: x1 + x2 = 1 forces x1 != x2,
# x1 x2 = 1 forces both to 1.

print("unsat:", boolean_solve([parse_anf("[[1],[2]]"), parse_anf("[[1,2]]")]).implicants)
