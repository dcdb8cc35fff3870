from math import factorial, inf

import pytest
from hypothesis import given, settings, strategies as st

from rskcells.combinat import (
    PowerDiagram,
    SizeMismatchError,
    Tableau,
    Tabloid,
    all_tabloids,
    beta_sequence,
    carter_condition,
    check_partition,
    count_standard,
    dominates,
    enumerate_standard,
    format_partition,
    hook_lengths,
    lambda_nd,
    lambda_nd_exhaustive,
    parse_partition,
    partitions,
    power_diagram,
    shape_from_beta,
    signed_d,
    t_low,
    t_up,
    transpose,
)


@st.composite
def partition_strategy(draw, max_n=9):
    n = draw(st.integers(min_value=1, max_value=max_n))
    return draw(st.sampled_from(partitions(n)))


def test_check_partition():
    assert check_partition([3, 3, 2]) == (3, 3, 2)
    for bad in ([], [0], [2, 3], [3, -1]):
        with pytest.raises(ValueError):
            check_partition(bad)


def test_parse_format():
    assert parse_partition("3,3,2") == (3, 3, 2)
    assert format_partition((3, 3, 2)) == "3,3,2"


@given(partition_strategy())
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert sum(transpose(lam)) == sum(lam)


def test_dominates_examples():
    assert dominates((4, 4), (3, 3, 2))
    assert dominates((3, 3, 2), (3, 3, 2))
    assert not dominates((3, 3, 2), (4, 4))
    with pytest.raises(SizeMismatchError):
        dominates((2,), (1, 1, 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_dominance_is_partial_order(n):
    parts = partitions(n)
    for a in parts:
        assert dominates(a, a)
        for b in parts:
            if dominates(a, b) and dominates(b, a):
                assert a == b
            for c in parts:
                if dominates(a, b) and dominates(b, c):
                    assert dominates(a, c)


def test_lambda_nd_against_exhaustive_scan():
    for n in range(1, 9):
        for d in range(1, n + 2):
            assert lambda_nd(n, d) == lambda_nd_exhaustive(n, d), (n, d)


def test_lambda_nd_values():
    # the dominance-least partition of 8 with at most 3 parts
    assert lambda_nd(8, 3) == (3, 3, 2)
    assert lambda_nd(8, 2) == (4, 4)
    assert lambda_nd(5, 5) == (1, 1, 1, 1, 1)
    assert lambda_nd(5, 2) == lambda_nd_exhaustive(5, 2) == (3, 2)


def test_hook_lengths():
    assert hook_lengths((3, 3, 2)) == ((5, 4, 2), (4, 3, 1), (2, 1))
    assert hook_lengths((1,)) == ((1,),)
    assert hook_lengths((5,)) == ((5, 4, 3, 2, 1),)


def test_count_standard():
    assert count_standard((3, 3, 2)) == 42
    assert count_standard((6,)) == 1
    assert count_standard((2, 1)) == len(enumerate_standard((2, 1))) == 2


@pytest.mark.parametrize("n", range(1, 9))
def test_count_matches_enumeration(n):
    for lam in partitions(n):
        assert count_standard(lam) == len(enumerate_standard(lam))


@pytest.mark.parametrize("n", range(1, 9))
def test_rsk_counting_identity(n):
    assert sum(count_standard(lam) ** 2 for lam in partitions(n)) == factorial(n)


def test_enumerate_standard_order():
    tabs = enumerate_standard((2, 1))
    assert [t.text() for t in tabs] == ["1,3/2", "1,2/3"]
    assert enumerate_standard((1, 1, 1)) == [t_low((1, 1, 1))]
    tabs = enumerate_standard((3, 3, 2))
    assert len(tabs) == 42
    assert tabs[0] == t_low((3, 3, 2))
    words = [t.row_reading_word() for t in tabs[1:]]
    assert words == sorted(words)
    assert all(t.is_standard() for t in tabs)


def test_superstandard_tableaux():
    assert t_up((4, 3, 1)).rows == ((1, 2, 3, 4), (5, 6, 7), (8,))
    assert t_low((4, 3, 1)).rows == ((1, 4, 6, 8), (2, 5, 7), (3,))


def test_beta_sequence():
    assert beta_sequence((3, 3, 2)) == (5, 4, 2)
    assert beta_sequence((4,)) == (4,)
    assert beta_sequence((1, 1)) == (2, 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_beta_roundtrip(n):
    for lam in partitions(n):
        assert shape_from_beta(beta_sequence(lam)) == lam


def test_signed_d():
    assert signed_d((5, 4, 2)) == 42
    assert signed_d((3, 3)) == 0
    assert signed_d((3, 0)) == 1
    assert signed_d(()) == 1
    with pytest.raises(ValueError):
        signed_d((3, 0, 0))
    with pytest.raises(ValueError):
        signed_d((3, -1))


@given(partition_strategy())
def test_signed_d_matches_count_on_sorted(lam):
    assert signed_d(beta_sequence(lam)) == count_standard(lam)


def test_signed_d_alternating():
    # swapping two entries flips the sign; a 3-cycle preserves it
    assert signed_d((4, 5, 2)) == -42
    assert signed_d((2, 4, 5)) == -42
    assert signed_d((2, 5, 4)) == 42
    assert signed_d((5, 0, 1)) == -signed_d((5, 1, 0))


def test_power_diagram():
    assert power_diagram((2, 1), 2, 2).values == ((0, 0), (0,))
    assert power_diagram((2, 2), 2, 2).values == ((0, 1), (1, 0))
    assert power_diagram((3, 3, 2), inf, 5).values == ((0, 0, 0), (0, 0, 0), (0, 0))
    diag = power_diagram((2, 2), 2, inf)
    assert diag.values == ((0, 1), (1, 0))
    with pytest.raises(ValueError):
        power_diagram((2, 1), 1, 2)


def test_carter_condition():
    assert carter_condition(power_diagram((2, 1), 2, 2))
    assert not carter_condition(power_diagram((2, 2), 2, 2))
    assert carter_condition(PowerDiagram((2, 2), ((0, 0), (0, 0))))
    # constant rows but not columns
    assert carter_condition(PowerDiagram((2, 2), ((0, 0), (1, 1))))
    assert carter_condition(PowerDiagram((2, 2), ((0, 1), (0, 1))))


def test_tableau_serialization():
    t = Tableau.from_text("1,3,5/2,4/6")
    assert t.text() == "1,3,5/2,4/6"
    assert t.shape == (3, 2, 1)
    assert t.is_standard()
    assert not Tableau([[2, 1], [3]]).is_row_standard()
    with pytest.raises(ValueError):
        Tableau([[1, 2], [2]])


def test_tabloid_rows_sorted():
    t = Tabloid([(3, 1), (2,)])
    assert t.rows == ((1, 3), (2,))
    assert t.apply((2, 3, 1)).rows == ((1, 2), (3,))  # entries mapped x -> xw


def test_all_tabloids_count():
    assert len(all_tabloids((2, 2))) == 6
    assert len(all_tabloids((2, 1, 1))) == 12
    tabs = all_tabloids((2, 1))
    assert tabs == sorted(tabs, key=lambda t: t.rows)
