"""
Dimension tables for two-part and three-part tails
===================================================

For a fixed tail mu, the irreducible D^(n-|mu|, mu) has a dimension that is
eventually polynomial in n -- but which polynomial you get depends on the
residue of n modulo the characteristic p (through m = n mod p).  This script
prints the full table for a few small tails and then spot-checks one entry
against an honest Gram-matrix rank computation.
"""

from specht import (
    gram_rank_mod_p,
    irreducible_dimension_formula,
    irreducible_dimension_table,
)

for mu in [(), (1,), (2,), (1, 1), (2, 1)]:
    table = irreducible_dimension_table(mu)
    print(f"tail {list(mu)}:")
    for line in table.render().splitlines():
        print("  " + line)
    print()

# Evaluate one case by hand: mu = (2), p = 5, n = 12, so m = 12 mod 5 = 2
# and the middle row of the table applies.
poly = irreducible_dimension_formula((2,), 2)
predicted = poly(12)
print(f"dim D[10,2] in characteristic 5 should be {poly} at n=12, i.e. {predicted}")

# The Gram matrix of S^(10,2) over F_5 knows the same number: its rank is
# the dimension of the irreducible head.
actual = gram_rank_mod_p((10, 2), 5)
print(f"rank of the Gram matrix of S[10,2] mod 5 = {actual}")
assert predicted == actual
