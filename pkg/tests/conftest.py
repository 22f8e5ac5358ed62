"""Shared hypothesis strategies for partition-flavoured property tests."""

from hypothesis import strategies as st


def partitions(max_size=12, max_part=8, max_rows=6):
    """Arbitrary partitions (possibly empty) with the given bounds."""

    def build(parts):
        return tuple(sorted(parts, reverse=True))

    return (
        st.lists(st.integers(1, max_part), min_size=0, max_size=max_rows)
        .map(build)
        .filter(lambda lam: sum(lam) <= max_size)
    )


def nonempty_partitions(max_size=12, max_part=8, max_rows=6):
    return partitions(max_size, max_part, max_rows).filter(lambda lam: lam != ())


def small_primes():
    return st.sampled_from([2, 3, 5, 7, 11, 13])
