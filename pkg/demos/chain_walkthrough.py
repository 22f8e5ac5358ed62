"""
From rim-hook chains to Grothendieck-group expansions
======================================================

The expansion of an irreducible [D^lambda] into Specht classes [S^nu] is
driven by a chain of partitions: remove the unique rim hook of the right
size from lambda, then re-add it in every position that lands strictly
higher in dominance order.  Signs alternate down the chain.

This is a walkthrough for lambda = (5,2) at every interesting residue m.
"""

from specht import (
    GrothendieckVector,
    decompose_irreducible,
    decompose_standard,
    rim_hook_chain,
    tail_bounded_partitions,
)

lam = (5, 2)
for m in range(0, 5):
    chain = rim_hook_chain(lam, m)
    vec = decompose_irreducible(lam, m)
    print(f"m = {m}: chain {[list(p) for p in chain.elements]}")
    print(f"       [D{list(lam)}] = {vec}")

# m = 2 is the nontrivial case here: a 5-hook comes off (5,2) leaving (1,1),
# and the only strictly-higher re-addition is (6,1).  Hence the two-term
# alternating sum.

print()

# The change of basis goes the other way too.  Over the family of all
# partitions of 7 with at most 3 boxes below the first row, the matrix of
# chains is unitriangular, so [S^lambda] expands into irreducibles by exact
# inversion -- no linear algebra over Q required, just back-substitution.
family = tail_bounded_partitions(7, 3)
print(f"family of 7 with tail <= 3: {[list(p) for p in family]}")
s_expansion = decompose_standard(lam, 2, family)
print(f"[S{list(lam)}] = {s_expansion}")

# Round trip: push the D-expansion back through decompose_irreducible and
# we must land exactly on [S(5,2)].
back = GrothendieckVector()
for (label, nu), coeff in s_expansion.items():
    back = back + decompose_irreducible(nu, 2) * coeff
assert back == GrothendieckVector({("S", lam): 1})
print("round trip ok")
