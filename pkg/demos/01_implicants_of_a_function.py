"""
Orthogonal implicants of one function
=====================================

A Boolean function in ANF is expanded over an orthonormal set of terms.
Each term either kills the function, satisfies it outright, or leaves a
smaller function to expand again.
"""

from anfsolve import AnfPoly, cofactor, generate_implicants, on_set, parse_anf, verify_implicant_set

# variables w, x, y, z are numbered 1..4
f = AnfPoly([1, [1], [2], [4], [1, 3], [1, 4], [2, 4], [1, 2, 3], [2, 3, 4], [1, 3, 4]])
print("f =", f)

###############################################################################
# The orthonormal terms over (w, x, y, z) partition the 16 points.

for t in on_set([1, 2, 3, 4]):
    print(f"  f/{t} = {cofactor(f, t)}")

###############################################################################
# Recursing on the non-constant cofactors gives five pairwise disjoint terms.

implicants = generate_implicants(f)
print("implicants:", implicants)
print("checks:", verify_implicant_set(f, implicants))

###############################################################################
# The variable order changes the terms but not the function they describe.

g = parse_anf("[[1],[2],[2,3]]")
print("index order:    ", generate_implicants(g, "index"))
print("frequency order:", generate_implicants(g, "frequency"))
