import random
from fractions import Fraction
from math import factorial

import pytest

from rskcells.combinat import enumerate_standard, lambda_nd, partitions
from rskcells.errors import InfeasibleError
from rskcells.laurent import FieldSpec
from rskcells.quotients import (
    CHAR2_WORDS,
    char_p_counterexample,
    classical_specht_independent,
    classical_specht_vector,
    column_stabilizer,
    endomorphism_basis_check,
    expected_quotient_dim,
    j_equals_tabloid_kernel,
    j_ideal_rref,
    mixed_module_basis_check,
    monomial_invariant_product,
    plain_permutation_endo_report,
    quotient_basis_perms,
    tabloid_kernel_basis_check,
    tabloid_kernel_expected_dim,
    theorem2_over_Z_check,
    trace_monomial_span_check,
    verify_quotient_basis,
    y_d_elt,
)
from rskcells.rsk import rsk_shape
from rskcells.symgroup import (
    all_perms,
    identity,
    longest_decreasing_subsequence,
    multiply,
    sign,
)

QQ = FieldSpec(0, 1)


def test_y_d_small():
    yd = y_d_elt(2, 1)
    assert yd.terms == {(1, 2): Fraction(1), (2, 1): Fraction(-1)}
    yd = y_d_elt(3, 1)
    assert yd.terms == {(1, 2, 3): Fraction(1), (2, 1, 3): Fraction(-1)}
    yd = y_d_elt(3, 2)
    assert len(yd.terms) == 6
    assert all(yd.terms[w] == sign(w) for w in yd.terms)
    with pytest.raises(ValueError):
        y_d_elt(3, 3)


def test_quotient_basis_counts():
    assert quotient_basis_perms(4, 1) == [identity(4)]
    assert len(quotient_basis_perms(4, 2)) == 14 == expected_quotient_dim(4, 2)
    for n in range(2, 9):
        for d in range(1, n + 1):
            assert len(quotient_basis_perms(n, d)) == expected_quotient_dim(n, d)


def test_verify_quotient_basis():
    assert verify_quotient_basis(3, 2, QQ)
    assert verify_quotient_basis(4, 2, QQ)
    assert verify_quotient_basis(4, 1, QQ)
    assert verify_quotient_basis(4, 7, QQ)  # d >= n: J = 0
    for n in (2, 3, 4):
        for d in range(1, n + 1):
            assert verify_quotient_basis(n, d, QQ), (n, d)


def test_verify_quotient_basis_gfp():
    assert verify_quotient_basis(4, 2, FieldSpec(5, 1))


def test_j_dimension():
    basis, _, _ = j_ideal_rref(3, 2, QQ)
    assert basis.rank == 1
    basis, _, _ = j_ideal_rref(4, 2, QQ)
    assert basis.rank == factorial(4) - 14  # = 10


def test_bound():
    with pytest.raises(InfeasibleError):
        verify_quotient_basis(7, 2, QQ)


@pytest.mark.parametrize("n,d", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)])
def test_j_equals_kernel(n, d):
    assert j_equals_tabloid_kernel(n, d)


def test_tabloid_kernel_trivial_shape():
    # the trivial representation: kernel has dimension n! - 1
    for n in (3, 4):
        assert tabloid_kernel_expected_dim((n,)) == factorial(n) - 1
        assert tabloid_kernel_basis_check((n,), QQ)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_tabloid_kernel_all_shapes(n):
    for lam in partitions(n):
        assert tabloid_kernel_basis_check(lam, QQ), lam


def test_tabloid_kernel_rejects_positive_characteristic():
    with pytest.raises(ValueError):
        tabloid_kernel_basis_check((2, 2), FieldSpec(2, 1))


def test_char_p_counterexample():
    report = char_p_counterexample()
    assert report["ok"]
    assert all(rsk_shape(w) == (3, 1) for w in CHAR2_WORDS)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_endomorphism_basis(n):
    for lam in partitions(n):
        assert endomorphism_basis_check(lam, QQ), lam


def test_endo_basis_1_1():
    # C_s acts by -2 over Q at a=1 on the sign module
    assert endomorphism_basis_check((1, 1), QQ)


def test_plain_permutations_fail_at_22():
    report = plain_permutation_endo_report((2, 2), QQ)
    assert not report["full"]
    assert report["rank"] == 2
    assert sorted(report["identity_actors"]) == [(2, 1, 4, 3), (3, 4, 1, 2)]


def test_mixed_module_checks():
    assert mixed_module_basis_check([(3,), (2, 1)], QQ)
    shapes3 = list(partitions(3))
    assert mixed_module_basis_check(shapes3, QQ)
    # singleton reduces to the endomorphism check
    assert mixed_module_basis_check([(2, 1)], QQ)


def test_mixed_all_subsets_n3():
    import itertools

    shapes = list(partitions(3))
    for r in range(1, len(shapes) + 1):
        for subset in itertools.combinations(shapes, r):
            assert mixed_module_basis_check(list(subset), QQ), subset


def test_column_stabilizer():
    t = enumerate_standard((2, 2))[0]
    stab = column_stabilizer(t)
    assert len(stab) == 4
    assert identity(4) in stab


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_classical_specht_vectors_independent(n):
    for lam in partitions(n):
        assert classical_specht_independent(lam), lam


def test_classical_specht_vector_shape():
    t = enumerate_standard((2, 1))[0]
    vec = classical_specht_vector(t)
    assert sum(abs(c) for c in vec.values()) == 2


@pytest.mark.parametrize("n,d", [(3, 1), (4, 2), (5, 2), (5, 3)])
def test_y_d_kills_tabloids(n, d):
    from rskcells.quotients import y_d_kills_tabloids

    assert y_d_kills_tabloids(n, d)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_theorem2_over_Z(n):
    for lam in partitions(n):
        assert theorem2_over_Z_check(lam), lam


def test_monomial_product():
    assert monomial_invariant_product((2, 1), (1, 2)) == (2, 1, 3, 4)
    assert monomial_invariant_product(identity(2), identity(3)) == identity(5)


def test_monomial_product_lds_rule_and_associativity():
    rng = random.Random(42)
    for _ in range(120):
        m = rng.randint(1, 5)
        k = rng.randint(1, 10 - m - 1) if m < 9 else 1
        sig = tuple(rng.sample(range(1, m + 1), m))
        tau = tuple(rng.sample(range(1, k + 1), k))
        prod = monomial_invariant_product(sig, tau)
        assert longest_decreasing_subsequence(prod) == max(
            longest_decreasing_subsequence(sig),
            longest_decreasing_subsequence(tau),
        )
    a, b, c = (2, 1), (1, 3, 2), (1,)
    assert monomial_invariant_product(monomial_invariant_product(a, b), c) == (
        monomial_invariant_product(a, monomial_invariant_product(b, c))
    )


def test_trace_monomial_spans():
    assert trace_monomial_span_check(2, 1, 1)
    assert trace_monomial_span_check(2, 2, 2)
    assert trace_monomial_span_check(3, 2, 2)
