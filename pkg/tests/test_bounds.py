"""Upper bounds, densities, and the summary table."""

import math
from fractions import Fraction

import pytest

from permsnake.bounds import (
    bounds_row,
    bounds_table,
    even_push_upper,
    ksnake_density,
    linf_upper,
    trivial_upper,
)
from permsnake.ksnake import ksnake_size


def test_trivial_upper_is_half_factorial():
    assert [trivial_upper(n) for n in (3, 4, 5, 6)] == [3, 12, 60, 360]


def test_even_push_pinned_values():
    assert even_push_upper(5) == 60
    assert even_push_upper(7) == 2519
    assert even_push_upper(9) == 181439


def test_even_push_at_most_trivial_and_strict_from_six():
    for n in range(3, 13):
        assert even_push_upper(n) <= trivial_upper(n)
    for n in range(6, 13):
        assert even_push_upper(n) < trivial_upper(n)


def test_linf_upper_pinned_values():
    assert [linf_upper(n) for n in (4, 5, 6, 7)] == [6, 30, 90, 630]


def test_linf_upper_closed_form():
    for n in range(2, 15):
        assert linf_upper(n) == math.factorial(n) // 2 ** (n // 2)


def test_density_pinned_values():
    assert ksnake_density(3) == Fraction(1, 2)
    assert ksnake_density(5) == Fraction(3, 8)


def test_density_ratio_recursion():
    for n in range(2, 10):
        assert ksnake_density(2 * n + 1) / ksnake_density(2 * n - 1) == Fraction(
            2 * n - 1, 2 * n
        )


def test_density_decreases_but_stays_positive():
    prev = Fraction(1)
    for N in range(3, 20, 2):
        d = ksnake_density(N)
        assert 0 < d < prev
        prev = d


def test_density_is_size_over_group_order():
    for N in (3, 5, 7, 9):
        assert ksnake_density(N) == Fraction(ksnake_size(N), math.factorial(N))


def test_bounds_row_families_present_where_defined():
    row5 = bounds_row(5)
    assert row5.ksnake_size == 45
    assert row5.ksnake_density == Fraction(3, 8)
    assert row5.linf_size == 18
    assert 0 < row5.ksnake_rate < 1
    assert 0 < row5.linf_rate < 1

    row4 = bounds_row(4)
    assert row4.ksnake_size is None
    assert row4.ksnake_density is None
    assert row4.linf_size == 6

    # size formulas extend past the build range; n=12 gives 6!*(6+5!)
    row12 = bounds_row(12)
    assert row12.linf_size == 90720
    assert row12.trivial_upper == math.factorial(12) // 2
    assert row12.ksnake_size is None  # even n has no kendall construction

    row3 = bounds_row(3)
    assert row3.ksnake_size == 3
    assert row3.linf_size is None


def test_bounds_table_range():
    rows = bounds_table(4, 8)
    assert [r.n for r in rows] == [4, 5, 6, 7, 8]
    with pytest.raises(ValueError):
        bounds_table(8, 4)
    with pytest.raises(ValueError):
        bounds_row(1)
    with pytest.raises(ValueError):
        bounds_row(21)


def test_rates_positive_but_below_one_across_range():
    for row in bounds_table(4, 10):
        if row.ksnake_rate is not None:
            assert 0 < row.ksnake_rate < 1
        if row.linf_rate is not None:
            assert 0 < row.linf_rate < 1
