from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from patternlab import gf2
from patternlab.gf2 import Gf2Vector
from patternlab.subsets import (
    Chain, SubsetIndexer, boundary, boundary_matrix, cocycle_basis, complement, enumerate_halvings,
    subset_rank, subset_unrank,
)


@pytest.mark.parametrize("s, expected", [((1, 2, 3), 0), ((1, 2, 4), 1), ((5, 6, 7), 34)])
def test_rank_known_values(s, expected):
    assert subset_rank(s, 7) == expected


def test_rank_matches_sorted_enumeration():
    for n in range(1, 11):
        for m in range(0, min(n, 5) + 1):
            colex = sorted(combinations(range(1, n + 1), m), key=lambda s: tuple(reversed(s)))
            idx = SubsetIndexer(n, m)
            assert len(idx) == comb(n, m)
            for i, s in enumerate(colex):
                assert subset_rank(s, n) == i
                assert subset_unrank(i, n, m) == s
                assert idx.unrank(i) == s and idx.rank(s) == i


def test_rank_prefix_stability():
    # colex indices do not depend on n, so enlarging the ground set keeps them
    for s in combinations(range(1, 7), 3):
        assert subset_rank(s, 6) == subset_rank(s, 9)


def test_rank_rejects_bad_input():
    with pytest.raises(ValueError):
        subset_rank((1, 1, 2), 5)
    with pytest.raises(ValueError):
        subset_rank((0, 2), 5)
    with pytest.raises(ValueError):
        subset_unrank(10, 5, 2)
    with pytest.raises(ValueError):
        SubsetIndexer(5, 3).rank((1, 2))


def test_halvings_of_four():
    assert enumerate_halvings({1, 2, 3, 4}, 2) == [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))]


@given(st.sets(st.integers(1, 20), min_size=2, max_size=10).filter(lambda s: len(s) % 2 == 0))
def test_halvings_partition(F):
    h = len(F) // 2
    pairs = enumerate_halvings(F, h)
    assert len(pairs) == comb(2 * h, h) // 2
    seen = set()
    for s, t in pairs:
        assert set(s) | set(t) == F and not set(s) & set(t)
        assert min(F) in s
        seen.add(frozenset((s, t)))
    assert len(seen) == len(pairs)


def test_halvings_size_six():
    assert len(enumerate_halvings(range(1, 7), 3)) == 10
    with pytest.raises(ValueError):
        enumerate_halvings({1, 2, 3}, 2)


def test_boundary_of_triangle():
    c = boundary(Chain.from_faces(4, [(1, 2, 3)]))
    assert c.faces() == [(1, 2), (1, 3), (2, 3)]


def test_boundary_squared_zero_matrices():
    for n in range(2, 9):
        for d in range(1, n - 1):
            upper, lower = boundary_matrix(n, d + 1), boundary_matrix(n, d)
            assert (upper @ lower).is_zero()


@given(st.integers(3, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(2, n - 1), st.integers(0, 2**60))))
def test_boundary_squared_zero_chains(args):
    n, d, seed = args
    size = comb(n, d + 1)
    c = Chain(n, d, Gf2Vector(size, seed & ((1 << size) - 1)))
    assert boundary(boundary(c)).is_zero()


def test_sphere_chains_sum_to_zero():
    # boundaries of the (k+2)-faces F - i, summed over i in F, cancel for every (k+3)-set F
    for k in range(0, 3):
        for n in range(k + 3, 8):
            for F in combinations(range(1, n + 1), k + 3):
                total = Chain(n, k, Gf2Vector(comb(n, k + 1)))
                for i in F:
                    total = total + boundary(Chain.from_faces(n, [tuple(x for x in F if x != i)]))
                assert total.is_zero()


def test_cocycle_basis_dimension_and_closedness():
    for n in range(3, 8):
        for m in range(1, min(n, 4)):
            basis = cocycle_basis(n, m)
            # coboundaries of (m-1)-cochains on a simplex: dimension C(n-1, m-1)
            assert len(basis) == comb(n - 1, m - 1)
            if m + 1 <= n:
                d = boundary_matrix(n, m)
                for v in basis:
                    assert d.apply(v).bits == 0
            assert gf2.rank(gf2.Gf2Matrix.from_vectors(basis)) == len(basis)


def test_complement():
    assert complement((2, 4), 5) == (1, 3, 5)
    assert complement((), 3) == (1, 2, 3)


def test_chain_addition_checks_group():
    a = Chain.from_faces(4, [(1, 2)])
    with pytest.raises(ValueError):
        a + Chain.from_faces(5, [(1, 2)])
    assert (a + a).is_zero()
    assert Chain.from_faces(4, [(1, 2), (1, 2)]).is_zero()
