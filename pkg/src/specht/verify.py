"""Grid verification of the polynomial dimension formulas against the Gram oracle.

Every (mu, p, n) cell compares irreducible_dimension_formula(mu, n mod p)
evaluated at n with gram_rank_mod_p((n - |mu|, mu), p). Records where the
padded shape is p-singular or n <= p are out of regime: they are reported
but excluded from pass/fail. Mismatches only count against the run when the
record also satisfies p > |mu| and n > 4|mu|, the window in which the
formula is expected to hold; inside that window an error state counts as
a failed comparison. Per-record failures never abort the grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .decomposition import (
    NotStabilized,
    NotTotallyOrdered,
    SizeError,
    irreducible_dimension_formula,
)
from .dimensions import pad_partition
from .gram import DEFAULT_SIZE_CAP, TooLarge, gram_rank_mod_p
from .partitions import Partition, format_partition, is_p_regular, partition

__all__ = ["VerificationRecord", "VerificationReport", "run_verification"]


@dataclass
class VerificationRecord:
    mu: Partition
    p: int
    n: int
    m: int
    k: int
    hypothesis: bool  # p > k and n > 4k
    in_regime: bool  # padded shape valid and p-regular, and n > p
    formula_dim: int | None = None
    oracle_dim: int | None = None
    match: bool | None = None
    error: str | None = None

    def to_json_obj(self) -> dict:
        return {
            "mu": list(self.mu),
            "p": self.p,
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "hypothesis": self.hypothesis,
            "in_regime": self.in_regime,
            "formula_dim": self.formula_dim,
            "oracle_dim": self.oracle_dim,
            "match": self.match,
            "error": self.error,
        }


@dataclass
class VerificationReport:
    grid: list[VerificationRecord]
    summary: dict[str, int]

    @property
    def passed(self) -> bool:
        return self.summary["conjecture_mismatches"] == 0

    def to_json_obj(self) -> dict:
        return {
            "grid": [rec.to_json_obj() for rec in self.grid],
            "summary": dict(self.summary),
        }

    def render_text(self) -> str:
        lines = ["mu         p   n   m  formula  oracle  match  regime"]
        for r in self.grid:
            formula = "-" if r.formula_dim is None else str(r.formula_dim)
            oracle = "-" if r.oracle_dim is None else str(r.oracle_dim)
            if r.error is not None:
                status = "error"
            elif r.match is None:
                status = "-"
            else:
                status = "yes" if r.match else "NO"
            regime = "in" if r.in_regime else "out"
            if r.hypothesis:
                regime += "+hyp"
            lines.append(
                f"{format_partition(r.mu):<10} {r.p:<3} {r.n:<3} {r.m:<2} "
                f"{formula:>7}  {oracle:>6}  {status:<5}  {regime}"
            )
            if r.error is not None:
                lines.append(f"    error: {r.error}")
        lines.append("")
        for key in (
            "records",
            "in_regime",
            "out_of_regime",
            "matches",
            "mismatches",
            "conjecture_mismatches",
            "errors",
        ):
            lines.append(f"{key}: {self.summary[key]}")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"verdict: {verdict}")
        return "\n".join(lines) + "\n"


def _mu_sort_key(mu: Partition):
    return (sum(mu), tuple(-x for x in mu))


def run_verification(
    mu_list: Iterable[Partition],
    p_list: Iterable[int],
    n_values: Iterable[int],
    size_cap: int = DEFAULT_SIZE_CAP,
) -> VerificationReport:
    """Compare formula and oracle on the full (mu, p, n) grid.

    Records come out in (mu, p, n) lexicographic order (mu graded by size);
    internally the grid is walked grouped by (mu, n) so the cached integer
    Gram matrix serves every prime before moving on.
    """
    mus = sorted({partition(mu) for mu in mu_list}, key=_mu_sort_key)
    ps = sorted(set(p_list))
    ns = sorted(set(n_values))
    by_key: dict[tuple[Partition, int, int], VerificationRecord] = {}
    for mu in mus:
        for n in ns:
            for p in ps:
                by_key[(mu, p, n)] = _build_record(mu, p, n, size_cap)
    grid = [by_key[(mu, p, n)] for mu in mus for p in ps for n in ns]
    summary = {
        "records": len(grid),
        "in_regime": sum(1 for r in grid if r.in_regime),
        "out_of_regime": sum(1 for r in grid if not r.in_regime),
        "matches": sum(1 for r in grid if r.match is True),
        "mismatches": sum(1 for r in grid if r.match is False),
        "conjecture_mismatches": sum(
            1 for r in grid if r.in_regime and r.hypothesis and r.match is not True
        ),
        "errors": sum(1 for r in grid if r.error is not None),
    }
    return VerificationReport(grid=grid, summary=summary)


def _add_error(rec: VerificationRecord, prefix: str, exc: Exception) -> None:
    msg = f"{prefix}: {exc}"
    rec.error = msg if rec.error is None else f"{rec.error}; {msg}"


def _build_record(
    mu: Partition, p: int, n: int, size_cap: int
) -> VerificationRecord:
    k = sum(mu)
    m = n % p
    rec = VerificationRecord(
        mu=mu,
        p=p,
        n=n,
        m=m,
        k=k,
        hypothesis=(p > k and n > 4 * k),
        in_regime=False,
    )
    try:
        lam = pad_partition(mu, n)
    except ValueError as exc:
        _add_error(rec, "shape", exc)
        return rec
    rec.in_regime = n > p and is_p_regular(lam, p)
    try:
        value = irreducible_dimension_formula(mu, m)(n)
        if value.denominator == 1:
            rec.formula_dim = int(value)
        else:
            _add_error(rec, "formula", ValueError(f"non-integral value {value}"))
    except (NotStabilized, NotTotallyOrdered, SizeError) as exc:
        _add_error(rec, "formula", exc)
    try:
        rec.oracle_dim = gram_rank_mod_p(lam, p, size_cap)
    except TooLarge as exc:
        _add_error(rec, "oracle", exc)
    if rec.formula_dim is not None and rec.oracle_dim is not None:
        rec.match = rec.formula_dim == rec.oracle_dim
    return rec
