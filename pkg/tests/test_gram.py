"""Explicit Specht modules: tableaux, polytabloids, Gram matrices, ranks."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
import specht.gram as gram_mod
from specht import (
    NotPrime,
    TooLarge,
    format_gram_dump,
    gram_matrix,
    gram_rank_mod_p,
    gram_rank_rational,
    integer_rank,
    irreducible_dim_hook_family_check,
    modular_rank,
    partitions_of,
    polytabloid,
    specht_dimension,
    standard_tableaux,
    tabloid_of,
)
from specht.gram import is_standard


# ---------------------------------------------------------------------------
# standard tableaux


def test_standard_tableaux_of_2_1():
    assert standard_tableaux((2, 1)) == (((1, 2), (3,)), ((1, 3), (2,)))


def test_standard_tableaux_counts():
    assert len(standard_tableaux((3, 1))) == 3
    assert len(standard_tableaux((4,))) == 1
    assert standard_tableaux((4,)) == (((1, 2, 3, 4),),)


@pytest.mark.parametrize("n", range(1, 8))
def test_tableau_count_equals_dimension(n):
    for lam in partitions_of(n):
        assert len(standard_tableaux(lam)) == specht_dimension(lam)


@pytest.mark.parametrize("n", range(1, 6))
def test_tableaux_match_brute_enumeration(n):
    for lam in partitions_of(n):
        assert sorted(standard_tableaux(lam)) == sorted(oracles.standard_fillings(lam))


def test_tableaux_come_out_in_row_reading_order():
    tabs = standard_tableaux((3, 2))
    words = [tuple(x for row in t for x in row) for t in tabs]
    assert words == sorted(words)


def test_is_standard():
    assert is_standard(((1, 2), (3,)))
    assert is_standard(((1, 3), (2, 4)))
    assert not is_standard(((2, 1), (3,)))  # decreasing along the row
    assert not is_standard(((2, 3), (1, 4)))  # decreasing down a column


def test_standard_tableaux_respects_size_cap():
    with pytest.raises(TooLarge):
        standard_tableaux((10, 9, 8), size_cap=16)
    # explicit override admits bigger shapes
    assert len(standard_tableaux((17,), size_cap=17)) == 1


# ---------------------------------------------------------------------------
# polytabloids and the Gram matrix


def test_polytabloid_examples():
    assert polytabloid(((1, 2), (3,))) == {((1, 2), (3,)): 1, ((2, 3), (1,)): -1}
    assert polytabloid(((1, 3), (2,))) == {((1, 3), (2,)): 1, ((2, 3), (1,)): -1}
    assert polytabloid(((1, 2, 3),)) == {((1, 2, 3),): 1}


def test_tabloid_of_sorts_rows():
    assert tabloid_of(((3, 1), (2,))) == ((1, 3), (2,))


def test_gram_matrix_examples():
    assert gram_matrix((2, 1)) == [[2, 1], [1, 2]]
    assert gram_matrix((1, 1)) == [[2]]
    assert gram_matrix((3,)) == [[1]]
    assert gram_matrix((1,)) == [[1]]


@pytest.mark.parametrize("n", range(2, 8))
def test_gram_matrices_are_symmetric_with_positive_diagonal(n):
    for lam in partitions_of(n):
        g = gram_matrix(lam)
        for i in range(len(g)):
            assert g[i][i] > 0
            for j in range(len(g)):
                assert g[i][j] == g[j][i]


def test_polytabloid_diagonal_norm_is_column_group_order():
    """<e_T, e_T> = |column stabilizer|: distinct signed terms, all +-1."""
    import math

    for lam in [(2, 2), (3, 1), (2, 2, 1), (3, 3, 1)]:
        cols = []
        t = standard_tableaux(lam)[0]
        ncols = max(len(r) for r in t)
        order = 1
        for c in range(ncols):
            col_len = sum(1 for r in t if len(r) > c)
            order *= math.factorial(col_len)
        e = polytabloid(t)
        assert sum(v * v for v in e.values()) == order


# ---------------------------------------------------------------------------
# rank kernels


def test_modular_rank_basics():
    assert modular_rank([[1, 0], [0, 1]], 5) == 2
    assert modular_rank([[0, 0], [0, 0]], 5) == 0
    assert modular_rank([[2, 1], [1, 2]], 3) == 1
    assert modular_rank([[2, 1], [1, 2]], 5) == 2
    assert modular_rank([], 5) == 0


def test_modular_rank_rejects_huge_primes():
    with pytest.raises(ValueError):
        modular_rank([[1]], 2**31 + 11)


def test_integer_rank_basics():
    assert integer_rank([[2, 1], [1, 2]]) == 2
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[0]]) == 0
    assert integer_rank([]) == 0


@given(
    st.lists(
        st.lists(st.integers(-9, 9), min_size=4, max_size=4),
        min_size=1,
        max_size=5,
    ),
    st.sampled_from([2, 3, 5, 7, 11]),
)
@settings(max_examples=80)
def test_rank_kernels_agree_with_textbook_elimination(rows, p):
    assert integer_rank(rows) == oracles.rank_over_Q(rows)
    assert modular_rank(rows, p) == oracles.rank_mod_p(rows, p)


def test_rank_is_invariant_under_simultaneous_permutation():
    g = gram_matrix((3, 2))
    idx = list(range(len(g)))
    rng = random.Random(7)
    for p in (2, 3, 5):
        base = modular_rank(g, p)
        for _ in range(5):
            rng.shuffle(idx)
            shuffled = [[g[i][j] for j in idx] for i in idx]
            assert modular_rank(shuffled, p) == base


# ---------------------------------------------------------------------------
# Gram ranks: frozen values and structural properties


def test_gram_rank_examples():
    assert gram_rank_mod_p((2, 1), 3) == 1
    assert gram_rank_mod_p((2, 1), 5) == 2
    assert gram_rank_mod_p((5, 2), 5) == 8


def test_gram_rank_requires_prime():
    with pytest.raises(NotPrime):
        gram_rank_mod_p((2, 1), 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_rational_rank_is_full(n):
    for lam in partitions_of(n):
        assert gram_rank_rational(lam) == specht_dimension(lam)


@pytest.mark.parametrize("p", [7, 11, 13])
def test_rank_is_full_for_primes_beyond_n(p):
    for n in range(1, min(p, 7)):
        for lam in partitions_of(n):
            assert gram_rank_mod_p(lam, p) == specht_dimension(lam)


@pytest.mark.parametrize("n", range(2, 8))
def test_rank_never_exceeds_dimension(n):
    for lam in partitions_of(n):
        for p in (2, 3, 5):
            assert gram_rank_mod_p(lam, p) <= specht_dimension(lam)


def test_streaming_and_cached_paths_agree(monkeypatch):
    direct = gram_rank_mod_p((4, 2), 3)
    monkeypatch.setattr(gram_mod, "_STREAM_THRESHOLD", 1)
    assert gram_rank_mod_p((4, 2), 3) == direct


def test_gram_rank_size_cap():
    with pytest.raises(TooLarge):
        gram_rank_mod_p((9, 8), 5)  # 17 boxes > default cap 16
    with pytest.raises(TooLarge):
        # 20 single-box columns: the column group alone is 20! >> the limit
        gram_rank_mod_p(tuple([1] * 20), 3, size_cap=25)


# ---------------------------------------------------------------------------
# the (n-1,1) cross-check


@pytest.mark.parametrize(
    "n,p,pair",
    [(10, 5, (8, 8)), (7, 5, (6, 6)), (4, 5, (3, 3)), (6, 2, (4, 4)), (6, 3, (4, 4))],
)
def test_hook_family_check_examples(n, p, pair):
    assert irreducible_dim_hook_family_check(n, p) == pair


def test_hook_family_check_agrees_everywhere_small():
    for n in range(3, 11):
        for p in (2, 3, 5, 7, 11, 13):
            expected, actual = irreducible_dim_hook_family_check(n, p)
            assert expected == actual, (n, p)
            assert expected == n - 1 - (1 if n % p == 0 else 0)


def test_hook_family_check_rejects_tiny_n():
    with pytest.raises(ValueError):
        irreducible_dim_hook_family_check(2, 5)


# ---------------------------------------------------------------------------
# dump format


def test_gram_dump_format():
    text = format_gram_dump((2, 1), 3)
    assert text.splitlines() == ["2 3", "2 1", "1 2"]
    text5 = format_gram_dump((2, 1), 5)
    assert text5.splitlines()[0] == "2 5"
