"""Brute-force Specht module oracle.

Polytabloids span the Specht module inside the tabloid permutation module;
with tabloids orthonormal, the Gram matrix of the standard polytabloid basis
is an exact integer matrix, and its rank over F_p equals the dimension of
the irreducible head of the Specht module for p-regular shapes. Entries are
computed with exact big integers and reduced mod p only inside the
elimination kernel, so one matrix serves every prime.
"""

from __future__ import annotations

from functools import cache, lru_cache
from itertools import permutations, product
from math import factorial, prod
from typing import Sequence

import numpy as np

from .dimensions import specht_dimension
from .partitions import Partition, partition
from .primes import NotPrime, is_prime

__all__ = [
    "DEFAULT_SIZE_CAP",
    "TooLarge",
    "StandardTableau",
    "Tabloid",
    "standard_tableaux",
    "tabloid_of",
    "polytabloid",
    "gram_matrix",
    "modular_rank",
    "integer_rank",
    "gram_rank_mod_p",
    "gram_rank_rational",
    "irreducible_dim_hook_family_check",
    "format_gram_dump",
]

DEFAULT_SIZE_CAP = 16
_STREAM_THRESHOLD = 2000
_MAX_COLUMN_GROUP = 10_000_000

StandardTableau = tuple[tuple[int, ...], ...]
Tabloid = tuple[tuple[int, ...], ...]


class TooLarge(RuntimeError):
    """Shape exceeds the size cap, or its column group is impractically large."""


def _check_cap(lam: Partition, size_cap: int) -> Partition:
    lam = partition(lam)
    if sum(lam) > size_cap:
        raise TooLarge(f"|{lam}| = {sum(lam)} exceeds the size cap {size_cap}")
    return lam


def standard_tableaux(
    lam: Partition, size_cap: int = DEFAULT_SIZE_CAP
) -> tuple[StandardTableau, ...]:
    """All standard tableaux of the shape, sorted by row-reading word."""
    return _standard_tableaux(_check_cap(lam, size_cap))


@cache
def _standard_tableaux(lam: Partition) -> tuple[StandardTableau, ...]:
    n = sum(lam)
    if n == 0:
        return ((),)
    out = []
    for i, part in enumerate(lam):
        # n sits in a removable corner; recurse on what is left.
        if i + 1 == len(lam) or lam[i + 1] < part:
            smaller = partition(lam[:i] + (part - 1,) + lam[i + 1 :])
            for t in _standard_tableaux(smaller):
                rows = [list(r) for r in t]
                while len(rows) <= i:
                    rows.append([])
                rows[i].append(n)
                out.append(tuple(tuple(r) for r in rows))
    out.sort(key=lambda t: tuple(x for row in t for x in row))
    return tuple(out)


def is_standard(tableau: StandardTableau) -> bool:
    """Rows and columns strictly increasing, entries exactly 1..n."""
    rows = [list(r) for r in tableau]
    entries = sorted(x for r in rows for x in r)
    if entries != list(range(1, len(entries) + 1)):
        return False
    if any(len(a) < len(b) for a, b in zip(rows, rows[1:])):
        return False
    for r in rows:
        if any(a >= b for a, b in zip(r, r[1:])):
            return False
    for upper, lower in zip(rows, rows[1:]):
        if any(upper[c] >= lower[c] for c in range(len(lower))):
            return False
    return True


def tabloid_of(tableau: StandardTableau) -> Tabloid:
    """Row-equivalence class of a tableau in canonical form (rows sorted)."""
    return tuple(tuple(sorted(row)) for row in tableau)


def _signed_perms(column: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
    """Every rearrangement of the column with the sign of the permutation."""
    index = {v: i for i, v in enumerate(column)}
    out = []
    for arr in permutations(column):
        ranks = [index[v] for v in arr]
        inversions = sum(
            1
            for a in range(len(ranks))
            for b in range(a + 1, len(ranks))
            if ranks[a] > ranks[b]
        )
        out.append((arr, -1 if inversions % 2 else 1))
    return out


def polytabloid(tableau: StandardTableau) -> dict[Tabloid, int]:
    """Signed sum of tabloids over the column stabilizer of the tableau.

    Distinct stabilizer elements give distinct tabloids, so the result has
    exactly one +/-1 entry per group element.
    """
    tableau = tuple(tuple(row) for row in tableau)
    n_rows = len(tableau)
    width = len(tableau[0]) if tableau else 0
    cols = [
        tuple(tableau[r][c] for r in range(n_rows) if len(tableau[r]) > c)
        for c in range(width)
    ]
    order = prod(factorial(len(c)) for c in cols)
    if order > _MAX_COLUMN_GROUP:
        raise TooLarge(f"column stabilizer of shape has {order} elements")
    out: dict[Tabloid, int] = {}
    for combo in product(*(_signed_perms(col) for col in cols)):
        sign = 1
        rows: list[list[int]] = [[] for _ in range(n_rows)]
        for arr, s in combo:
            sign *= s
            for r, value in enumerate(arr):
                rows[r].append(value)
        out[tuple(tuple(sorted(r)) for r in rows)] = sign
    return out


def _pairing(a: dict[Tabloid, int], b: dict[Tabloid, int]) -> int:
    if len(a) > len(b):
        a, b = b, a
    return sum(coeff * b.get(key, 0) for key, coeff in a.items())


@lru_cache(maxsize=12)
def _gram_matrix_cached(lam: Partition) -> tuple[tuple[int, ...], ...]:
    polys = [polytabloid(t) for t in _standard_tableaux(lam)]
    d = len(polys)
    mat = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            v = _pairing(polys[i], polys[j])
            mat[i][j] = v
            mat[j][i] = v
    return tuple(tuple(r) for r in mat)


def gram_matrix(lam: Partition, size_cap: int = DEFAULT_SIZE_CAP) -> list[list[int]]:
    """Exact integer Gram matrix of the polytabloid basis (tabloids orthonormal)."""
    lam = _check_cap(lam, size_cap)
    return [list(row) for row in _gram_matrix_cached(lam)]


def modular_rank(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over F_p by Gaussian elimination with first-nonzero pivoting.

    All arithmetic is exact in int64: entries stay below p, so products stay
    below p**2 (p must fit in 31 bits).
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p >= 1 << 31:
        raise ValueError(f"p={p} too large for the elimination kernel")
    a = np.asarray(rows, dtype=np.int64) % p
    if a.ndim != 2 or a.size == 0:
        return 0
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        pivots = np.nonzero(a[rank:, col])[0]
        if pivots.size == 0:
            continue
        pr = rank + int(pivots[0])
        if pr != rank:
            a[[rank, pr]] = a[[pr, rank]]
        a[rank] = a[rank] * pow(int(a[rank, col]), p - 2, p) % p
        below = np.nonzero(a[rank + 1 :, col])[0] + rank + 1
        if below.size:
            a[below] = (a[below] - np.outer(a[below, col], a[rank])) % p
        rank += 1
    return rank


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals of an integer matrix.

    Fraction-free (Bareiss) elimination: every intermediate entry is a minor
    of the original matrix, so the divisions below are exact in Python ints.
    """
    a = [[int(x) for x in row] for row in rows]
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pivot_row = a[rank]
        pivot = pivot_row[col]
        for r in range(rank + 1, nrows):
            row = a[r]
            factor = row[col]
            for j in range(col + 1, ncols):
                row[j] = (pivot * row[j] - factor * pivot_row[j]) // prev
            row[col] = 0
        prev = pivot
        rank += 1
    return rank


def gram_rank_mod_p(lam: Partition, p: int, size_cap: int = DEFAULT_SIZE_CAP) -> int:
    """Rank of the Gram matrix over F_p.

    For p-regular shapes this is the dimension of the irreducible head of
    the Specht module in characteristic p; in general it is the rank of the
    canonical bilinear form.
    """
    lam = _check_cap(lam, size_cap)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if lam and specht_dimension(lam) > _STREAM_THRESHOLD:
        # Too big to keep the exact integer matrix around: reduce row by row.
        polys = [polytabloid(t) for t in _standard_tableaux(lam)]
        d = len(polys)
        a = np.zeros((d, d), dtype=np.int64)
        for i in range(d):
            for j in range(i, d):
                v = _pairing(polys[i], polys[j]) % p
                a[i, j] = v
                a[j, i] = v
        return modular_rank(a, p)
    return modular_rank(_gram_matrix_cached(lam), p)


def gram_rank_rational(lam: Partition, size_cap: int = DEFAULT_SIZE_CAP) -> int:
    """Rank of the Gram matrix over the rationals (characteristic zero)."""
    lam = _check_cap(lam, size_cap)
    return integer_rank(_gram_matrix_cached(lam))


def irreducible_dim_hook_family_check(n: int, p: int) -> tuple[int, int]:
    """Cross-check dim of the irreducible at (n-1, 1) two independent ways.

    Expected value: the natural permutation module on n points over F_p has
    the augmentation kernel V (vectors summing to zero); the irreducible in
    question is V modulo its intersection with the all-ones line, and both
    dimensions are computed here by row reduction alone. Actual value: the
    Gram rank oracle at (n-1, 1). Returns (expected, actual).
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    diffs = [[0] * n for _ in range(n - 1)]
    for i in range(n - 1):
        diffs[i][i] = 1
        diffs[i][i + 1] = -1
    # dim(V + line) = rank of the stacked rows; dim(V cap line) = n - dim(V + line),
    # so dim(V / (V cap line)) = rank(stacked) - 1.
    expected = modular_rank(diffs + [[1] * n], p) - 1
    actual = gram_rank_mod_p((n - 1, 1), p)
    return expected, actual


def format_gram_dump(lam: Partition, p: int, size_cap: int = DEFAULT_SIZE_CAP) -> str:
    """Plain-text dump of the mod-p Gram matrix: first line "d p", then d rows
    of d residues, space-separated."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    mat = gram_matrix(lam, size_cap)
    lines = [f"{len(mat)} {p}"]
    lines += [" ".join(str(v % p) for v in row) for row in mat]
    return "\n".join(lines) + "\n"
