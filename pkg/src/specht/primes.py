"""Primality testing and factorization helpers.

``is_prime`` is a deterministic Miller-Rabin test for everything below
3.3e24 (in particular for all 64-bit integers); beyond that bound the same
fixed bases make it a very strong probable-prime test. Factorization is
trial division over a sieved prime table with a Pollard rho fallback, so it
stays deterministic as well.
"""

from __future__ import annotations

from functools import cache
from math import gcd, isqrt

__all__ = ["NotPrime", "is_prime", "prime_factors"]


class NotPrime(ValueError):
    """An argument that must be prime is not."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
# The 12 bases above decide primality for all n < 3_317_044_064_679_887_385_961_981.


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with fixed bases)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@cache
def _small_primes() -> tuple[int, ...]:
    limit = 1 << 16
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i in range(limit) if sieve[i])


def prime_factors(n: int) -> list[int]:
    """Sorted distinct prime divisors of a positive integer (empty for 1)."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    found: set[int] = set()
    _factor_into(n, found)
    return sorted(found)


def _factor_into(v: int, out: set[int]) -> None:
    for p in _small_primes():
        if p * p > v:
            break
        if v % p == 0:
            out.add(p)
            while v % p == 0:
                v //= p
    if v == 1:
        return
    if is_prime(v):
        out.add(v)
        return
    d = _pollard_rho(v)
    _factor_into(d, out)
    _factor_into(v // d, out)


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of an odd composite with no small prime factor."""
    if n % 2 == 0:
        return 2
    for c in range(1, 1000):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise RuntimeError(f"rho failed to split {n}")
