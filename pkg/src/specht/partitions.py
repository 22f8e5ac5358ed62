"""Partition and Young-diagram combinatorics.

Partitions are plain tuples of weakly decreasing positive integers (no
trailing zeros), so they hash, compare and serialize like values. Cells are
1-based ``(row, col)`` pairs. Everything here is a pure function; it is
safe to call from multiple threads.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .primes import NotPrime, is_prime

Partition = tuple[int, ...]
Cell = tuple[int, int]


class SizeMismatch(ValueError):
    """Dominance comparison of partitions of different sizes."""


class Dominance(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def partition(parts: Iterable[int]) -> Partition:
    """Normalize to a canonical partition tuple, stripping trailing zeros."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"parts must be positive, got {p}")
    if any(a < b for a, b in zip(p, p[1:])):
        raise ValueError(f"parts must be weakly decreasing, got {p}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse the bracketed text form, e.g. ``"[5,2]"`` or ``"[]"``."""
    s = text.strip()
    if not s:
        raise ValueError("empty partition text; write [] for the empty partition")
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return ()
    try:
        parts = [int(tok) for tok in s.split(",")]
    except ValueError as exc:
        raise ValueError(f"cannot parse partition from {text!r}") from exc
    return partition(parts)


def format_partition(lam: Partition) -> str:
    """Render as bracketed text, the inverse of :func:`parse_partition`."""
    return "[" + ",".join(str(x) for x in lam) + "]"


def conjugate(lam: Partition) -> Partition:
    """Transpose of the diagram (column lengths)."""
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def diagram_cells(lam: Partition) -> list[Cell]:
    """All cells of the Young diagram in row-major order."""
    return [(i, j) for i, part in enumerate(lam, 1) for j in range(1, part + 1)]


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of ``n`` in decreasing lexicographic order."""
    def rec(remaining: int, cap: int, prefix: Partition) -> Iterator[Partition]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    if n == 0:
        yield ()
    elif n > 0:
        yield from rec(n, n, ())


def tail_bounded_partitions(n: int, k: int) -> list[Partition]:
    """Partitions of ``n`` whose first row is at least ``n - k``, decreasing lex."""
    out: list[Partition] = []
    for j in range(min(k, n) + 1):
        first = n - j
        if first == 0:
            if not j:
                out.append(())
            continue
        for tail in partitions_of(j):
            if not tail or tail[0] <= first:
                out.append((first, *tail))
    return out


def dominance_compare(a: Partition, b: Partition) -> Dominance:
    """Compare partitions of equal size in the dominance (partial) order."""
    a, b = partition(a), partition(b)
    if sum(a) != sum(b):
        raise SizeMismatch(f"cannot compare partitions of {sum(a)} and {sum(b)}")
    if a == b:
        return Dominance.EQUAL
    ge = le = True
    ta = tb = 0
    for i in range(max(len(a), len(b))):
        ta += a[i] if i < len(a) else 0
        tb += b[i] if i < len(b) else 0
        if ta < tb:
            ge = False
        elif ta > tb:
            le = False
    if ge:
        return Dominance.GREATER
    if le:
        return Dominance.LESS
    return Dominance.INCOMPARABLE


def hook_lengths(lam: Partition) -> dict[Cell, int]:
    """Hook length (arm + leg + 1) of every cell, keyed by 1-based (row, col)."""
    lam = partition(lam)
    conj = conjugate(lam)
    return {
        (i, j): (part - j) + (conj[j - 1] - i) + 1
        for i, part in enumerate(lam, 1)
        for j in range(1, part + 1)
    }


def removable_rim_hooks(lam: Partition, h: int) -> list[tuple[Cell, Partition]]:
    """All ways to peel a border strip of size ``h`` off the rim.

    One entry per cell with hook length exactly ``h``, ordered by (row, col)
    of that anchor; the remainder is the partition left after removal.
    Degenerate ``h`` (nonpositive, or larger than the diagram) gives ``[]``.
    """
    lam = partition(lam)
    if h <= 0 or h > sum(lam):
        return []
    conj = conjugate(lam)
    out = []
    for (i, j), hook in sorted(hook_lengths(lam).items()):
        if hook != h:
            continue
        bottom = conj[j - 1]  # last row of the strip
        parts = list(lam)
        for t in range(i, bottom):  # 1-based rows i..bottom-1 shift up, minus one
            parts[t - 1] = lam[t] - 1
        parts[bottom - 1] = j - 1
        out.append(((i, j), partition(parts)))
    return out


def addable_rim_hooks(mu: Partition, h: int) -> list[Partition]:
    """All partitions obtained from ``mu`` by adding a border strip of size ``h``.

    Works on first-column hook lengths (beta-numbers): adding an ``h``-strip
    shifts one beta-number up by ``h`` onto a free value. Decreasing
    lexicographic order.
    """
    mu = partition(mu)
    if h <= 0:
        return []
    rows = len(mu) + h
    beta = [(mu[t] if t < len(mu) else 0) + (rows - 1 - t) for t in range(rows)]
    taken = set(beta)
    results = set()
    for b in beta:
        nb = b + h
        if nb in taken:
            continue
        shifted = sorted((taken - {b}) | {nb}, reverse=True)
        results.add(partition(v - (rows - 1 - t) for t, v in enumerate(shifted)))
    return sorted(results, reverse=True)


def is_p_regular(lam: Partition, p: int) -> bool:
    """True when no part value repeats ``p`` or more times (``p`` must be prime)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return all(c < p for c in Counter(partition(lam)).values())


def is_edge_connected(cells: Iterable[Cell]) -> bool:
    """True when the cells form one component under horizontal/vertical adjacency."""
    todo = set(cells)
    if not todo:
        return False
    stack = [next(iter(todo))]
    todo.discard(stack[0])
    while stack:
        r, c = stack.pop()
        for nbr in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if nbr in todo:
                todo.discard(nbr)
                stack.append(nbr)
    return not todo


def contains_2x2(cells: Iterable[Cell]) -> bool:
    """True when some 2x2 block lies entirely inside the cells."""
    cs = set(cells)
    return any(
        (r, c + 1) in cs and (r + 1, c) in cs and (r + 1, c + 1) in cs for r, c in cs
    )


@dataclass(frozen=True)
class BorderStrip:
    """An edge-connected skew strip with no 2x2 block.

    ``anchor`` is the (min row, min col) over the cells: the cell whose hook
    the strip removes when peeled from the enclosing partition.
    """

    cells: frozenset[Cell]
    anchor: Cell

    @property
    def size(self) -> int:
        return len(self.cells)

    @classmethod
    def between(cls, lam: Partition, mu: Partition) -> "BorderStrip":
        """The skew strip lam/mu; raises ValueError when mu is not inside lam."""
        lam, mu = partition(lam), partition(mu)
        if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
            raise ValueError(f"{mu} is not contained in {lam}")
        cells = frozenset(diagram_cells(lam)) - frozenset(diagram_cells(mu))
        if not cells:
            raise ValueError("empty strip")
        anchor = (min(r for r, _ in cells), min(c for _, c in cells))
        return cls(cells, anchor)

    def is_valid_strip(self) -> bool:
        return is_edge_connected(self.cells) and not contains_2x2(self.cells)
