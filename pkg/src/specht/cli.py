"""Command-line interface.

Exit codes: 0 success; 1 verification found an in-regime mismatch under the
p > k, n > 4k hypothesis; 2 invalid input; 3 an internal limit was hit
(size cap, search ceiling, unstabilized chain). Identical invocations
produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .decomposition import (
    CongruencePolynomial,
    GrothendieckVector,
    decompose_irreducible,
    decompose_standard,
    irreducible_dimension_table,
    rim_hook_chain,
)
from .dimensions import (
    RationalPolynomial,
    padding_threshold,
    specht_dimension,
    specht_dimension_polynomial,
)
from .gram import DEFAULT_SIZE_CAP, format_gram_dump, gram_rank_mod_p
from .parameters import parse_coefficients, prime_parameter_sequence
from .partitions import (
    Partition,
    format_partition,
    parse_partition,
    tail_bounded_partitions,
)
from .verify import run_verification

_DEFAULT_VERIFY_MU = ("[]", "[1]", "[2]", "[1,1]", "[3]", "[2,1]", "[1,1,1]")
_DEFAULT_VERIFY_P = (5, 7, 11)


def _env_size_cap() -> int:
    return int(os.environ.get("SPECHT_SIZE_CAP", DEFAULT_SIZE_CAP))


def _family_label(mu: Partition) -> str:
    k = sum(mu)
    first = f"n-{k}" if k else "n"
    return "[" + ",".join([first, *map(str, mu)]) + "]"


def _poly_json(poly: RationalPolynomial) -> dict:
    return {
        "degree": poly.degree,
        "coefficients": [str(c) for c in poly.coefficients],
        "text": str(poly),
    }


def cmd_dim_specht(args: argparse.Namespace) -> int:
    lam = parse_partition(args.partition)
    dim = specht_dimension(lam)
    if args.json:
        print(json.dumps({"partition": list(lam), "dimension": dim}))
    else:
        print(f"dim S{format_partition(lam)} = {dim}")
    return 0


def cmd_dim_poly(args: argparse.Namespace) -> int:
    mu = parse_partition(args.tail)
    poly = specht_dimension_polynomial(mu)
    threshold = max(padding_threshold(mu), 1)
    if args.json:
        obj = {"tail": list(mu), "threshold": threshold, **_poly_json(poly)}
        print(json.dumps(obj))
    else:
        print(f"dim S{_family_label(mu)} = {poly}  (valid for n >= {threshold})")
    return 0


def cmd_a_set(args: argparse.Namespace) -> int:
    lam = parse_partition(args.partition)
    chain = rim_hook_chain(lam, args.m)
    if args.json:
        obj = {
            "base": list(lam),
            "m": args.m,
            "elements": [list(el) for el in chain.elements],
        }
        print(json.dumps(obj))
    else:
        print(f"A({format_partition(lam)}, m={args.m}):")
        for el in chain.elements:
            print(f"  {format_partition(el)}")
    return 0


def _print_vector(lhs: str, vec: GrothendieckVector, as_json: bool) -> None:
    if as_json:
        print(json.dumps(vec.to_json_obj()))
    else:
        print(f"{lhs} = {vec}")


def cmd_decompose_irr(args: argparse.Namespace) -> int:
    lam = parse_partition(args.partition)
    vec = decompose_irreducible(lam, args.m)
    _print_vector(f"D{format_partition(lam)}", vec, args.json)
    return 0


def cmd_decompose_std(args: argparse.Namespace) -> int:
    lam = parse_partition(args.partition)
    family = tail_bounded_partitions(sum(lam), args.k)
    vec = decompose_standard(lam, args.m, family)
    _print_vector(f"S{format_partition(lam)}", vec, args.json)
    return 0


def _render_table(mu: Partition, table: CongruencePolynomial) -> str:
    lines = [f"dim D{_family_label(mu)} for n == m (mod p), n large:"]
    for m, poly in sorted(table.cases.items()):
        lines.append(f"  m == {m}: {poly}")
    lines.append(f"  otherwise: {table.default}")
    return "\n".join(lines)


def cmd_dim_table(args: argparse.Namespace) -> int:
    mu = parse_partition(args.tail)
    table = irreducible_dimension_table(mu, args.max_residue)
    if args.json:
        obj = {
            "tail": list(mu),
            "cases": [
                {"residue": m, **_poly_json(poly)}
                for m, poly in sorted(table.cases.items())
            ],
            "default": _poly_json(table.default),
        }
        print(json.dumps(obj))
    else:
        print(_render_table(mu, table))
    return 0


def cmd_gram_rank(args: argparse.Namespace) -> int:
    lam = parse_partition(args.partition)
    rank = gram_rank_mod_p(lam, args.p, args.size_cap)
    if args.dump is not None:
        with open(args.dump, "w", encoding="ascii") as fh:
            fh.write(format_gram_dump(lam, args.p, args.size_cap))
    if args.json:
        print(json.dumps({"partition": list(lam), "p": args.p, "rank": rank}))
    else:
        print(f"gram rank of {format_partition(lam)} mod {args.p} = {rank}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n_min > args.n_max:
        raise ValueError("--n-min must not exceed --n-max")
    mus = [parse_partition(text) for text in (args.mu or _DEFAULT_VERIFY_MU)]
    ps = args.p or list(_DEFAULT_VERIFY_P)
    report = run_verification(
        mus, ps, range(args.n_min, args.n_max + 1), size_cap=args.size_cap
    )
    if args.json:
        print(json.dumps(report.to_json_obj()))
    else:
        sys.stdout.write(report.render_text())
    return 0 if report.passed else 1


def cmd_prime_seq(args: argparse.Namespace) -> int:
    coeffs = parse_coefficients(args.coefficients)
    pairs = prime_parameter_sequence(
        coeffs, args.count, p_min=args.p_min, search_limit=args.search_limit
    )
    if args.json:
        obj = {
            "coefficients": list(coeffs),
            "pairs": [{"t": pair.t, "p": pair.p} for pair in pairs],
        }
        print(json.dumps(obj))
    else:
        for pair in pairs:
            print(f"({pair.t}, {pair.p})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="specht",
        description="Rim-hook decompositions and dimension formulas for modular "
        "Specht modules, with a Gram-matrix oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = add("dim-specht", cmd_dim_specht, "dimension of a Specht module")
    p.add_argument("partition", help="partition, e.g. [5,2]")

    p = add("dim-poly", cmd_dim_poly, "dimension polynomial of a padded family")
    p.add_argument("tail", help="tail partition, e.g. [2]")

    p = add("a-set", cmd_a_set, "rim-hook chain of a partition at residue m")
    p.add_argument("partition", help="partition, e.g. [5,2]")
    p.add_argument("m", type=int, help="residue of n modulo the characteristic")

    p = add("decompose-irr", cmd_decompose_irr, "irreducible class in Specht classes")
    p.add_argument("partition", help="partition, e.g. [5,2]")
    p.add_argument("m", type=int, help="residue of n modulo the characteristic")

    p = add("decompose-std", cmd_decompose_std, "Specht class in irreducible classes")
    p.add_argument("partition", help="partition, e.g. [5,2]")
    p.add_argument("m", type=int, help="residue of n modulo the characteristic")
    p.add_argument("k", type=int, help="family bound: all nu of n with n - nu[0] <= k")

    p = add("dim-table", cmd_dim_table, "residue-split irreducible dimension table")
    p.add_argument("tail", help="tail partition, e.g. [2]")
    p.add_argument(
        "--max-residue",
        type=int,
        default=None,
        help="largest residue tabulated (default 2*(|tail|+1))",
    )

    p = add("gram-rank", cmd_gram_rank, "rank of the Gram matrix over F_p")
    p.add_argument("partition", help="partition, e.g. [5,2]")
    p.add_argument("p", type=int, help="prime characteristic")
    p.add_argument(
        "--size-cap",
        type=int,
        default=_env_size_cap(),
        help="largest |partition| accepted (env SPECHT_SIZE_CAP)",
    )
    p.add_argument("--dump", metavar="FILE", help="also write the mod-p matrix dump")

    p = add("verify", cmd_verify, "formula-vs-oracle verification grid")
    p.add_argument(
        "--mu",
        action="append",
        help="tail partition, repeatable (default: all tails of size <= 3)",
    )
    p.add_argument(
        "--p",
        action="append",
        type=int,
        help="prime, repeatable (default: 5 7 11)",
    )
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument(
        "--size-cap",
        type=int,
        default=_env_size_cap(),
        help="largest |partition| accepted (env SPECHT_SIZE_CAP)",
    )

    p = add("prime-seq", cmd_prime_seq, "prime parameter pairs (t, p) with p | q(t)")
    p.add_argument("coefficients", help="constant-first coefficients, e.g. 1,0,1")
    p.add_argument("count", type=int, help="number of pairs")
    p.add_argument(
        "--p-min",
        type=int,
        default=2,
        help="primes must strictly exceed this (default 2: odd primes only)",
    )
    p.add_argument(
        "--search-limit",
        type=int,
        default=100_000,
        help="give up after scanning this many values of t",
    )

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    from .decomposition import FamilyIncomplete, NotStabilized  # noqa: F401
    from .gram import TooLarge
    from .parameters import SearchExhausted

    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TooLarge, SearchExhausted, NotStabilized) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
