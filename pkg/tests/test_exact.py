"""Closed-form counting kernel: frozen small values, oracles, and invariants."""

import pytest
from hypothesis import given, strategies as st

from fussforest.exact import (
    ExactnessError,
    Identity,
    Side,
    binomial,
    colored_ternary_count,
    forest_catalan,
    identity_side,
    k_catalan,
)
from fussforest.trees import enumerate_binary, enumerate_colored_ternary, enumerate_forests

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]


def test_binomial_small_values():
    assert binomial(5, 2) == 10
    assert binomial(7, 0) == 1
    assert binomial(4, 7) == 0
    assert binomial(0, 0) == 1
    assert binomial(6, -1) == 0


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


@given(st.integers(min_value=1, max_value=120), st.integers(min_value=-3, max_value=123))
def test_binomial_pascal_recurrence(n, k):
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(st.integers(min_value=0, max_value=120))
def test_binomial_row_sum(n):
    assert sum(binomial(n, k) for k in range(n + 1)) == 2 ** n


def test_k_catalan_values():
    assert k_catalan(0, 3) == 1
    assert k_catalan(4, 2) == 14
    assert k_catalan(4, 3) == 55
    assert [k_catalan(n, 2) for n in range(11)] == CATALAN


def test_k_catalan_matches_binary_enumeration():
    for n in range(7):
        assert k_catalan(n, 2) == sum(1 for _ in enumerate_binary(n))


def test_k_catalan_matches_ternary_enumeration():
    # Ternary trees with p internal vertices = colored ones with color sum 0.
    for p in range(5):
        assert k_catalan(p, 3) == sum(1 for _ in enumerate_colored_ternary(2 * p, p))


def test_k_catalan_validates_arguments():
    with pytest.raises(ValueError):
        k_catalan(-1, 2)
    with pytest.raises(ValueError):
        k_catalan(3, 1)


def test_division_is_exact_across_the_sweep():
    for k in (2, 3, 5):
        for n in range(201):
            assert binomial(k * n + 1, n) % (k * n + 1) == 0
            k_catalan(n, k)  # raises ExactnessError on any remainder


def test_forest_catalan_values():
    assert forest_catalan(0, 3, 5) == 1
    assert forest_catalan(1, 3, 1) == 1
    assert forest_catalan(2, 2, 2) == 5
    assert forest_catalan(3, 2, 2) == 14


def test_forest_catalan_matches_enumeration():
    for m in (1, 2, 3):
        for n in range(5):
            assert forest_catalan(n, 2, m) == sum(1 for _ in enumerate_forests("binary", n, m))


def test_forest_catalan_single_component_is_k_catalan():
    for k in (2, 3, 5):
        for n in range(20):
            assert forest_catalan(n, k, 1) == k_catalan(n, k)


def test_forest_catalan_validates_arguments():
    with pytest.raises(ValueError):
        forest_catalan(1, 2, 0)
    with pytest.raises(ValueError):
        forest_catalan(-1, 2, 1)


def test_colored_ternary_count_values():
    assert colored_ternary_count(2, 0) == 1
    assert colored_ternary_count(2, 1) == 1
    assert colored_ternary_count(4, 1) == 10
    assert colored_ternary_count(3, 2) == 0  # 2p > n: empty family


def test_colored_ternary_count_matches_enumeration():
    for n in range(7):
        for p in range(n // 2 + 1):
            assert colored_ternary_count(n, p) == sum(1 for _ in enumerate_colored_ternary(n, p))


def test_colored_counts_sum_to_catalan():
    for n in range(61):
        total = sum(colored_ternary_count(n, p) for p in range(n // 2 + 1))
        assert total == k_catalan(n, 2)


def test_ternary_identity_anchor():
    # n=4: terms 1 + 10 + 3 on the left, Catalan(4) on the right.
    assert identity_side(Identity.TERNARY, Side.LHS, 4) == 14
    assert identity_side(Identity.TERNARY, Side.RHS, 4) == 14


def test_ternary_forest_identity_anchor():
    assert identity_side(Identity.TERNARY_FOREST, Side.LHS, 2, 2) == 5
    assert identity_side(Identity.TERNARY_FOREST, Side.RHS, 2, 2) == 5
    assert identity_side(Identity.TERNARY_FOREST, Side.LHS, 0, 3) == 1


def test_quinary_identity_anchor():
    # n=4: left terms 1 + 1; right terms 14 - 15 + 3.
    assert identity_side(Identity.QUINARY, Side.LHS, 4) == 2
    assert identity_side(Identity.QUINARY, Side.RHS, 4) == 2


def test_identity_sides_agree_on_a_smoke_sweep():
    for n in range(25):
        assert identity_side(Identity.TERNARY, Side.LHS, n) == k_catalan(n, 2)
        assert identity_side(Identity.QUINARY, Side.LHS, n) == \
            identity_side(Identity.QUINARY, Side.RHS, n)
        for m in range(1, 5):
            for ident in (Identity.TERNARY_FOREST, Identity.QUINARY_FOREST):
                assert identity_side(ident, Side.LHS, n, m) == identity_side(ident, Side.RHS, n, m)


def test_forest_identity_at_m1_reduces_to_single_tree():
    for n in range(30):
        assert identity_side(Identity.TERNARY_FOREST, Side.LHS, n, 1) == \
            identity_side(Identity.TERNARY, Side.LHS, n)
        assert identity_side(Identity.QUINARY_FOREST, Side.LHS, n, 1) == \
            identity_side(Identity.QUINARY, Side.LHS, n)


@given(st.integers(min_value=0, max_value=40), st.integers(min_value=1, max_value=6))
def test_ternary_forest_identity_property(n, m):
    assert identity_side(Identity.TERNARY_FOREST, Side.LHS, n, m) == forest_catalan(n, 2, m)


def test_single_component_identities_reject_m():
    with pytest.raises(ValueError):
        identity_side(Identity.TERNARY, Side.LHS, 3, m=2)
    with pytest.raises(ValueError):
        identity_side(Identity.QUINARY, Side.RHS, 3, m=2)


def test_identity_side_validates_arguments():
    with pytest.raises(ValueError):
        identity_side(Identity.TERNARY_FOREST, Side.LHS, -1, 1)
    with pytest.raises(ValueError):
        identity_side(Identity.TERNARY_FOREST, Side.LHS, 1, 0)


def test_exactness_error_is_an_arithmetic_error():
    assert issubclass(ExactnessError, ArithmeticError)
