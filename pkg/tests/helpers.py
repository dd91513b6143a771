"""Shared enumeration and hypothesis strategies for the test suite."""

from itertools import combinations_with_replacement

from hypothesis import strategies as st

from floorsum import Instance


def iter_bounded(n_max, m_max, n_min=1):
    """Every bounded (m, A, K) cell with n_min <= n <= n_max, m <= m_max.

    A runs over multisets (nonincreasing tuples); K over [0, m-1].
    """
    for m in range(1, m_max + 1):
        for n in range(n_min, n_max + 1):
            for a in combinations_with_replacement(range(m - 1, -1, -1), n):
                for k in range(m):
                    yield m, a, k


@st.composite
def bounded_instances(draw, n_min=1, n_max=5, m_max=12):
    """A random bounded Instance (all elements and K in [0, m-1])."""
    m = draw(st.integers(1, m_max))
    n = draw(st.integers(n_min, n_max))
    a = tuple(draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n)))
    k = draw(st.integers(0, m - 1))
    return Instance(m, a, k)
