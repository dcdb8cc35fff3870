import itertools

import pytest

from rskcells.combinat import Tableau, enumerate_standard, lambda_nd, partitions, t_low, transpose
from rskcells.rsk import RskPair, rsk, rsk_inverse, rsk_shape
from rskcells.symgroup import (
    all_perms,
    identity,
    inverse,
    longest_decreasing_subsequence,
    longest_element,
    parabolic,
)
from rskcells.combinat import dominates


def test_documented_pair():
    pair = rsk((5, 1, 6, 2, 4, 3))
    assert pair.P.text() == "1,3,5/2,4/6"
    assert pair.Q.text() == "1,2,3/4,6/5"
    assert pair.shape == (3, 2, 1)
    assert rsk_inverse(pair) == (5, 1, 6, 2, 4, 3)


def test_extremes():
    n = 5
    pair = rsk(identity(n))
    assert pair.P.rows == pair.Q.rows == ((1, 2, 3, 4, 5),)
    pair = rsk(longest_element(n))
    assert pair.P.rows == pair.Q.rows == ((1,), (2,), (3,), (4,), (5,))
    assert rsk_shape(identity(n)) == (n,)


@pytest.mark.parametrize("n", range(1, 8))
def test_bijectivity_roundtrip(n):
    seen = set()
    for w in all_perms(n):
        pair = rsk(w)
        assert rsk_inverse(pair) == w
        key = (pair.P.rows, pair.Q.rows)
        assert key not in seen
        seen.add(key)


@pytest.mark.parametrize("n", range(1, 6))
def test_pairs_to_perm_roundtrip(n):
    for lam in partitions(n):
        tabs = enumerate_standard(lam)
        for p in tabs:
            for q in tabs:
                pair = RskPair(p, q)
                assert rsk(rsk_inverse(pair)) == pair


@pytest.mark.parametrize("n", range(1, 7))
def test_inversion_swaps_symbols(n):
    for w in all_perms(n):
        pair = rsk(w)
        pair_inv = rsk(inverse(w))
        assert pair_inv.P == pair.Q
        assert pair_inv.Q == pair.P


@pytest.mark.parametrize("n", range(1, 8))
def test_shape_rows_equal_lds(n):
    for w in all_perms(n):
        assert len(rsk_shape(w)) == longest_decreasing_subsequence(w)


@pytest.mark.parametrize("n", range(2, 7))
def test_shape_dominance_iff_lds_bound(n):
    for d in range(1, n + 1):
        lnd = lambda_nd(n, d)
        for w in all_perms(n):
            assert dominates(rsk_shape(w), lnd) == (
                longest_decreasing_subsequence(w) <= d
            )


@pytest.mark.parametrize("n", range(2, 7))
def test_w0_lambda_corresponds_to_superstandard_pair(n):
    for lam in partitions(n):
        par = parabolic(lam)
        tl = t_low(transpose(lam))
        assert rsk(par.w0) == RskPair(tl, tl)
        assert rsk_shape(par.w0) == transpose(lam)


def test_w0_22():
    assert rsk_shape((2, 1, 4, 3)) == (2, 2)


def test_rsk_inverse_validation():
    with pytest.raises(ValueError):
        RskPair(Tableau([[1, 2], [3]]), Tableau([[1, 2, 3]]))
    with pytest.raises(ValueError):
        RskPair(Tableau([[2, 1], [3]]), Tableau([[2, 1], [3]]))
