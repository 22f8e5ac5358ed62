"""Rim-hook chains and Grothendieck-group decompositions.

For a partition of n and a residue m, the chain collects everything
reachable by removing one rim hook of size n - m and re-adding one strictly
higher in dominance order. When the chain is totally ordered it determines
an alternating Specht-class expansion of the irreducible class at its base,
and for padded shapes (n - |mu|, mu) the expansion stabilizes in n, giving
closed polynomial dimension formulas split by the residue of n modulo the
(large) characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .dimensions import (
    RationalPolynomial,
    pad_partition,
    padding_threshold,
    specht_dimension_polynomial,
)
from .partitions import (
    Dominance,
    Partition,
    addable_rim_hooks,
    dominance_compare,
    format_partition,
    partition,
    removable_rim_hooks,
)

__all__ = [
    "SizeError",
    "NotTotallyOrdered",
    "FamilyIncomplete",
    "NotStabilized",
    "SPECHT",
    "IRREDUCIBLE",
    "RimHookChain",
    "rim_hook_chain",
    "GrothendieckVector",
    "decompose_irreducible",
    "decompose_standard",
    "irreducible_dimension_formula",
    "CongruencePolynomial",
    "irreducible_dimension_table",
]


class SizeError(ValueError):
    """Residue parameter outside 0 <= m < |lambda|."""


class NotTotallyOrdered(ValueError):
    """The collected set has a dominance-incomparable pair (n too small for this tail)."""


class FamilyIncomplete(ValueError):
    """A chain member escapes the supplied family."""


class NotStabilized(RuntimeError):
    """Chain shapes failed to agree between the two sampling points."""


SPECHT = "S"
IRREDUCIBLE = "D"

Label = str
Term = tuple[Label, Partition]


@dataclass(frozen=True)
class RimHookChain:
    """Strictly dominance-decreasing partitions ending at the base the chain was built from."""

    elements: tuple[Partition, ...]
    m: int

    @property
    def base(self) -> Partition:
        return self.elements[-1]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self.elements)


def rim_hook_chain(lam: Partition, m: int) -> RimHookChain:
    """The base partition plus everything reachable by removing one rim hook
    of size |lam| - m and re-adding one strictly higher in dominance order,
    sorted in decreasing dominance order.

    Raises NotTotallyOrdered when the collected set is not a chain, and
    SizeError unless 0 <= m < |lam|.
    """
    lam = partition(lam)
    n = sum(lam)
    if not 0 <= m < n:
        raise SizeError(f"residue m={m} must satisfy 0 <= m < {n}")
    found = {lam}
    h = n - m
    for _anchor, rest in removable_rim_hooks(lam, h):
        for nu in addable_rim_hooks(rest, h):
            if nu != lam and dominance_compare(nu, lam) is Dominance.GREATER:
                found.add(nu)
    elems = sorted(found, reverse=True)  # lex order refines dominance
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            if dominance_compare(elems[i], elems[j]) is Dominance.INCOMPARABLE:
                raise NotTotallyOrdered(
                    f"{format_partition(elems[i])} and {format_partition(elems[j])} "
                    f"are incomparable in the set built from {format_partition(lam)}, m={m}"
                )
    return RimHookChain(tuple(elems), m)


class GrothendieckVector:
    """Formal integer combination of labeled classes S[mu] / D[mu] of one size.

    Terms with zero coefficient are dropped; iteration is in increasing
    lexicographic order of the partition (dominance-smallest first, matching
    how the alternating expansions read), then by label.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Union[Mapping[Term, int], Iterable[tuple[Term, int]]] = (),
    ):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[Term, int] = {}
        for (label, part), coeff in items:
            if label not in (SPECHT, IRREDUCIBLE):
                raise ValueError(f"unknown label {label!r}")
            key = (label, partition(part))
            data[key] = data.get(key, 0) + int(coeff)
        data = {k: v for k, v in data.items() if v}
        sizes = {sum(part) for _, part in data}
        if len(sizes) > 1:
            raise ValueError(f"terms mix partition sizes {sorted(sizes)}")
        self._terms = data

    @staticmethod
    def _sort_key(item: tuple[Term, int]):
        (label, part), _ = item
        return part, label

    def items(self) -> list[tuple[Term, int]]:
        return sorted(self._terms.items(), key=self._sort_key)

    def coefficient(self, label: Label, part: Partition) -> int:
        return self._terms.get((label, partition(part)), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrothendieckVector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "GrothendieckVector":
        return GrothendieckVector({k: -v for k, v in self._terms.items()})

    def __add__(self, other: "GrothendieckVector") -> "GrothendieckVector":
        merged = dict(self._terms)
        for k, v in other._terms.items():
            merged[k] = merged.get(k, 0) + v
        return GrothendieckVector(merged)

    def __sub__(self, other: "GrothendieckVector") -> "GrothendieckVector":
        return self + (-other)

    def __mul__(self, scalar: int) -> "GrothendieckVector":
        return GrothendieckVector({k: v * scalar for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for (label, part), coeff in self.items():
            term = f"{label}{format_partition(part)}"
            if abs(coeff) != 1:
                term = f"{abs(coeff)}*{term}"
            if not chunks:
                chunks.append(term if coeff > 0 else "-" + term)
            else:
                chunks.append(("+ " if coeff > 0 else "- ") + term)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"GrothendieckVector({self._terms!r})"

    def to_json_obj(self) -> list[dict]:
        return [
            {"label": label, "partition": list(part), "coeff": coeff}
            for (label, part), coeff in self.items()
        ]

    @classmethod
    def from_json_obj(cls, obj: Iterable[Mapping]) -> "GrothendieckVector":
        return cls(
            ((item["label"], tuple(item["partition"])), item["coeff"]) for item in obj
        )


def decompose_irreducible(lam: Partition, m: int) -> GrothendieckVector:
    """Alternating Specht-class expansion of the irreducible class based at ``lam``.

    With chain elements lam(0) > ... > lam(d) = lam, the class is
    sum of (-1)^(d-i) * S[lam(i)]; a singleton chain means the Specht class
    itself is irreducible.
    """
    chain = rim_hook_chain(lam, m)
    d = len(chain) - 1
    return GrothendieckVector(
        {(SPECHT, el): (-1) ** (d - i) for i, el in enumerate(chain.elements)}
    )


def decompose_standard(
    lam: Partition, m: int, family: Iterable[Partition]
) -> GrothendieckVector:
    """Expand the Specht class of ``lam`` into irreducible classes over ``family``.

    Forms the unitriangular integer matrix whose rows are the irreducible
    expansions of the family members and inverts it exactly over the
    integers. FamilyIncomplete when ``lam`` or any chain member is missing
    from the family.
    """
    lam = partition(lam)
    n = sum(lam)
    fam = sorted({partition(nu) for nu in family}, reverse=True)
    for nu in fam:
        if sum(nu) != n:
            raise ValueError(
                f"family member {format_partition(nu)} has size {sum(nu)}, expected {n}"
            )
    index = {nu: i for i, nu in enumerate(fam)}
    if lam not in index:
        raise FamilyIncomplete(f"{format_partition(lam)} is not in the family")
    size = len(fam)
    mat = [[0] * size for _ in range(size)]
    for nu, i in index.items():
        for (_label, part), coeff in decompose_irreducible(nu, m).items():
            if part not in index:
                raise FamilyIncomplete(
                    f"chain member {format_partition(part)} of "
                    f"{format_partition(nu)} is outside the family"
                )
            mat[i][index[part]] = coeff
    # Unit lower-triangular in decreasing-lex order: invert by forward substitution.
    inv = [[0] * size for _ in range(size)]
    for i in range(size):
        inv[i][i] = 1
        for j in range(i):
            s = sum(mat[i][t] * inv[t][j] for t in range(j, i))
            if s:
                inv[i][j] = -s
    row = inv[index[lam]]
    return GrothendieckVector(
        {(IRREDUCIBLE, fam[j]): row[j] for j in range(size) if row[j]}
    )


_STABILIZATION_GAP = 7


def _chain_tails(mu: Partition, m: int, n: int) -> tuple[Partition, ...]:
    chain = rim_hook_chain(pad_partition(mu, n), m)
    return tuple(el[1:] for el in chain.elements)


@cache
def _dimension_formula(mu: Partition, m: int) -> RationalPolynomial:
    n0 = max(4 * sum(mu), padding_threshold(mu)) + m + 2
    tails = _chain_tails(mu, m, n0)
    if tails != _chain_tails(mu, m, n0 + _STABILIZATION_GAP):
        raise NotStabilized(
            f"chain tails for tail {format_partition(mu)}, m={m} changed "
            f"between n={n0} and n={n0 + _STABILIZATION_GAP}"
        )
    d = len(tails) - 1
    poly = RationalPolynomial()
    for i, tail in enumerate(tails):
        term = specht_dimension_polynomial(tail)
        poly = poly + term if (d - i) % 2 == 0 else poly - term
    return poly


def irreducible_dimension_formula(mu: Partition, m: int) -> RationalPolynomial:
    """Polynomial in n for the irreducible dimension at padded shape (n - |mu|, mu)
    when n is congruent to m modulo the (large) characteristic.

    The chain is sampled at two well-separated values of n and the element
    tails must agree (NotStabilized otherwise); the polynomial is then the
    alternating sum of the padded Specht dimension polynomials of the tails.
    """
    mu = partition(mu)
    if m < 0:
        raise SizeError(f"residue m={m} must be nonnegative")
    return _dimension_formula(mu, m)


@dataclass
class CongruencePolynomial:
    """A dimension polynomial split by the residue of n modulo the characteristic.

    ``cases[m]`` applies when n == m (mod p); ``default`` applies otherwise.
    The prime stays symbolic: the split does not depend on which (large)
    prime realizes the congruence. Every stored case differs from the
    default.
    """

    cases: dict[int, RationalPolynomial]
    default: RationalPolynomial

    def polynomial_for(self, m: int) -> RationalPolynomial:
        return self.cases.get(m, self.default)

    def render(self) -> str:
        lines = [f"m == {m}: {poly}" for m, poly in sorted(self.cases.items())]
        lines.append(f"otherwise: {self.default}")
        return "\n".join(lines)


def irreducible_dimension_table(
    mu: Partition, max_residue: Union[int, None] = None
) -> CongruencePolynomial:
    """Tabulate irreducible_dimension_formula over residues 0..max_residue,
    folding residues that match the generic Specht polynomial into the default.

    One residue past the range is sampled as well; if it still degenerates the
    declared range was too small and NotStabilized is raised.
    """
    mu = partition(mu)
    if max_residue is None:
        max_residue = 2 * (sum(mu) + 1)
    if max_residue < 0:
        raise ValueError("max_residue must be nonnegative")
    default = specht_dimension_polynomial(mu)
    cases: dict[int, RationalPolynomial] = {}
    for m in range(max_residue + 1):
        poly = irreducible_dimension_formula(mu, m)
        if poly != default:
            cases[m] = poly
    if irreducible_dimension_formula(mu, max_residue + 1) != default:
        raise NotStabilized(
            f"residue {max_residue + 1} still degenerates; raise max_residue"
        )
    return CongruencePolynomial(cases=cases, default=default)
