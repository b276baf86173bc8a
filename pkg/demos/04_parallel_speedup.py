"""
Thread segments and the Amdahl estimate
=======================================

Every implicant substitution is an independent task.  N counts them, N_seq
is the longest chain that has to run one after another, and their ratio
bounds the speedup from running tasks side by side.
"""

import time

from anfsolve import GenSpec, boolean_solve, generate_system, speedup_report
from anfsolve.generator import random_planted_point

n, m = 48, 64
system = generate_system(GenSpec(n, m, 4, seed=3, planted=random_planted_point(n, 3)))

for workers in (1, 2, 4):
    t0 = time.perf_counter()
    res = boolean_solve(system, workers=workers)
    print(f"workers={workers}: {len(res.implicants)} implicants, "
          f"N={res.stats.segments_total}, N_seq={res.stats.longest_chain}, "
          f"{time.perf_counter() - t0:.3f}s")

###############################################################################
# The counts do not depend on the worker pool, so the estimate is fixed by the
# instance.

print(speedup_report(res.stats.segments_total, res.stats.longest_chain, [1, 2, 4, 8, 16, 64]).render())
