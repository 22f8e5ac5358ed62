"""
Prime parameters from integer polynomial values
================================================

Given a nonconstant integer polynomial f with positive leading coefficient,
there are infinitely many primes dividing some value f(t).  Harvesting them
in increasing order yields (t, p) pairs with p | f(t) and p prime -- the raw
material for choosing characteristics adapted to a congruence condition.
"""

from specht import divisor_prime_census, evaluate, prime_parameter_sequence

# f(t) = t^2 + 1: the primes dividing its values are 2 and the primes
# congruent to 1 mod 4.
pairs = prime_parameter_sequence((1, 0, 1), 8, p_min=2)
print("t^2 + 1, first 8 pairs with p > 2:")
for pair in pairs:
    value = evaluate((1, 0, 1), pair.t)
    print(f"  t = {pair.t:3d}   p = {pair.p:5d}   f(t) = {value}")

print()

# A linear polynomial just walks the primes in its arithmetic progression.
print("t - 3, first 5 pairs with p > 3:")
for pair in prime_parameter_sequence((-3, 1), 5, p_min=3):
    print(f"  t = {pair.t:3d}   p = {pair.p:5d}")

print()

# Census view: which primes show up as divisors of f(t) for t up to a bound?
census = divisor_prime_census((1, 0, 1), 200)
print(f"primes dividing t^2+1 for some t <= 200: {len(census)} of them")
print(f"smallest ten: {sorted(census)[:10]}")
# Every odd prime in the census should be 1 mod 4.
odd = [p for p in census if p != 2]
assert all(p % 4 == 1 for p in odd)
print("all odd census primes are 1 mod 4, as they must be")
