"""Truncated series engine: arithmetic, substitutions, coefficient cross-checks."""

import pytest
from hypothesis import given, strategies as st

from fussforest.exact import forest_catalan, identity_side, k_catalan, Identity, Side
from fussforest.series import (
    TruncatedSeries,
    colored_ternary_series,
    colored_tree_series,
    forest_expansion_series,
    fuss_catalan_power_coefficients,
    fuss_catalan_series,
    geometric_series_power,
    verify_quinary_forest_series,
)

S = TruncatedSeries.of

small_series = st.lists(st.integers(min_value=-9, max_value=9), min_size=5, max_size=5).map(S)
valuation_one = small_series.map(lambda s: TruncatedSeries((0,) + s.coeffs[1:]))


def test_basic_arithmetic():
    one_plus_x = S([1, 1, 0])
    one_minus_x = S([1, -1, 0])
    assert one_plus_x * one_minus_x == S([1, 0, -1])
    assert S([4, 7]) ** 0 == S([1, 0])
    assert S([1, 1, 0, 0]) ** 3 == S([1, 3, 3, 1])
    assert one_plus_x + 1 == S([2, 1, 0])
    assert 2 * one_plus_x == S([2, 2, 0])
    assert one_plus_x - one_plus_x == S([0, 0, 0])


def test_arithmetic_truncates_to_the_smaller_order():
    assert (S([1, 1, 1, 1]) + S([1, 1])).order == 1
    assert (S([0, 1, 2, 3]) * S([1, 1])) == S([0, 1])


def test_shift_and_getitem():
    assert S([1, 2, 3]).shift(1) == S([0, 1, 2])
    assert S([5, 6])[1] == 6


def test_rejects_non_integer_coefficients():
    with pytest.raises(ValueError):
        TruncatedSeries((1.5, 2))
    with pytest.raises(ValueError):
        TruncatedSeries(())


def test_geometric_series_power():
    assert geometric_series_power(1, 3) == S([1, 1, 1, 1])
    assert geometric_series_power(3, 2) == S([1, 3, 6])
    assert geometric_series_power(3, 8) == geometric_series_power(1, 8) ** 3
    with pytest.raises(ValueError):
        geometric_series_power(0, 4)


def test_compose_basics():
    outer = S([1, 1, 0])  # 1 + y
    assert outer.compose(S([0, 0, 1])) == S([1, 0, 1])
    assert S([7, 3, 9]).compose(S([0, 0, 0])) == S([7, 0, 0])
    with pytest.raises(ValueError):
        outer.compose(S([1, 0, 0]))


def test_compose_ternary_substitution_by_hand():
    # C3 at x^2/(1-x)^3, truncated to x^3: 1 + x^2 + 3x^3
    inner = S([0, 0, 1, 3])
    composed = fuss_catalan_series(3, 3).compose(inner)
    assert composed == S([1, 0, 1, 3])
    assert geometric_series_power(1, 3) * composed == S([1, 1, 2, 5])


@given(small_series, valuation_one, valuation_one)
def test_compose_is_associative(outer, mid, inner):
    assert outer.compose(mid).compose(inner) == outer.compose(mid.compose(inner))


@given(small_series, small_series, small_series)
def test_mul_is_commutative_and_distributive(a, b, c):
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


def test_fuss_catalan_series_values():
    assert fuss_catalan_series(2, 5) == S([1, 1, 2, 5, 14, 42])
    assert fuss_catalan_series(3, 4) == S([1, 1, 3, 12, 55])
    for k in (2, 3, 5, 7):
        assert fuss_catalan_series(k, 6)[0] == 1


def test_fuss_catalan_series_matches_closed_form():
    for k in (2, 3, 5):
        s = fuss_catalan_series(k, 24)
        for i in range(25):
            assert s[i] == k_catalan(i, k)


def test_fuss_catalan_series_satisfies_its_equation():
    for k in (2, 3, 5):
        s = fuss_catalan_series(k, 16)
        x = TruncatedSeries.x(16)
        assert s == x * s ** k + 1


def test_colored_ternary_series_small():
    assert colored_ternary_series(3) == S([1, 1, 2, 5])
    assert colored_ternary_series(0) == S([1])


def test_colored_ternary_series_is_catalan():
    assert colored_ternary_series(40) == fuss_catalan_series(2, 40)


def test_colored_tree_series_k3_equals_ternary():
    assert colored_tree_series(3, 20) == colored_ternary_series(20)


def test_colored_tree_series_k5_frozen_prefix():
    # agrees with the closed-form sum of 5-ary forest terms at m=1
    series = colored_tree_series(5, 8)
    assert series == S([1, 1, 1, 1, 2, 7, 22, 57, 132])
    for n in range(9):
        assert series[n] == identity_side(Identity.QUINARY_FOREST, Side.LHS, n, 1)


def test_colored_tree_series_functional_equation_cleared_form():
    for k in (2, 3, 5):
        f = colored_tree_series(k, 32)
        x = TruncatedSeries.x(32)
        assert f - f ** k * x ** (k - 1) == x * f + 1


def test_power_coefficients_match_forest_counts():
    assert fuss_catalan_power_coefficients(2, 1, 10) == [k_catalan(i, 2) for i in range(11)]
    assert fuss_catalan_power_coefficients(3, 2, 6)[1] == 2
    for k in (2, 3, 5):
        for m in range(1, 7):
            coeffs = fuss_catalan_power_coefficients(k, m, 20)
            assert coeffs == [forest_catalan(p, k, m) for p in range(21)]


def test_quinary_three_way_report():
    assert verify_quinary_forest_series(20, 3) == []
    single = verify_quinary_forest_series(4, 1)
    assert single == []


def test_quinary_three_way_bounds_check():
    with pytest.raises(ValueError):
        verify_quinary_forest_series(10, 2, order=5)


def test_forest_expansion_equals_series_power():
    g = colored_ternary_series(24)
    for m in (1, 2, 3, 4):
        assert forest_expansion_series(m, 24) == g ** m
