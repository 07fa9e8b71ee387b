import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leelab import (
    ConstantSearchError,
    DomainError,
    Space,
    ball_volume,
    ball_volume_closed_form,
    closed_form_report,
    estimate_constant_cm,
    volume_bounds,
    volume_ratio_factor,
)
from leelab.volumes import GROW_BOTH, GROW_RADIUS, ratio_inequality_holds


def brute_volume(m, n, r):
    count = 0
    for word in itertools.product(range(m), repeat=n):
        if sum(min(c, m - c) for c in word) <= r:
            count += 1
    return count


def test_ball_volume_examples():
    assert ball_volume(Space(4, 2), 0) == 1
    assert ball_volume(Space(4, 2), 1) == 5
    assert ball_volume(Space(6, 2), 3) == 23
    assert brute_volume(4, 2, 1) == 5
    assert brute_volume(6, 2, 3) == 23


def test_ball_volume_edge_conventions():
    space = Space(5, 3)
    assert ball_volume(space, -1) == 0
    assert ball_volume(space, -7) == 0
    assert ball_volume(space, space.max_weight) == space.size
    assert ball_volume(space, space.max_weight + 3) == space.size


def test_ball_volume_against_enumeration_small():
    for m in range(2, 7):
        for n in range(1, 4):
            space = Space(m, n)
            for r in range(space.max_weight + 1):
                assert ball_volume(space, r) == brute_volume(m, n, r)


@given(
    st.integers(min_value=2, max_value=9),
    st.integers(min_value=1, max_value=5),
    st.data(),
)
def test_ball_volume_monotone(m, n, data):
    space = Space(m, n)
    r = data.draw(st.integers(min_value=0, max_value=space.max_weight - 1))
    assert ball_volume(space, r) < ball_volume(space, r + 1)


def test_closed_form_examples():
    assert ball_volume_closed_form(Space(6, 2), 3) == 23
    assert ball_volume_closed_form(Space(4, 2), 1) == 5
    assert ball_volume_closed_form(Space(5, 2), 1) == 5


def test_closed_form_even_matches_oracle():
    for m in (2, 4, 6, 8):
        for n in range(1, 7):
            space = Space(m, n)
            for r in range(space.max_weight + 1):
                assert ball_volume_closed_form(space, r) == ball_volume(space, r)


def test_closed_form_odd_known_discrepancies():
    # evaluated verbatim and reported, never patched
    assert ball_volume_closed_form(Space(5, 1), 2) == 3
    assert ball_volume(Space(5, 1), 2) == 5
    assert ball_volume_closed_form(Space(5, 2), 2) == 10
    assert ball_volume(Space(5, 2), 2) == 13
    report = closed_form_report(Space(5, 2))
    rows = {row.radius: row for row in report}
    assert not rows[2].agree and rows[2].closed_form == 10 and rows[2].oracle == 13
    assert rows[1].agree


def test_volume_bounds_examples():
    assert volume_bounds(Space(4, 2), 1) == (4, 5)
    assert volume_bounds(Space(6, 2), 3) == (4, 25)
    assert volume_bounds(Space(5, 3), 1) == (6, 7)


def test_volume_bounds_sandwich_small_grid():
    for m in range(3, 8):
        for n in range(2, 5):
            space = Space(m, n)
            for r in range(1, space.max_weight + 1):
                lower, upper = volume_bounds(space, r)
                assert lower <= ball_volume(space, r) <= upper


def test_volume_bounds_rejects_modulus_two():
    # for m = 2 the stated lower bound exceeds the volume (1 = m-1)
    assert 2 * 2 > ball_volume(Space(2, 2), 1)
    with pytest.raises(DomainError):
        volume_bounds(Space(2, 2), 1)


def test_ratio_factor_examples():
    assert volume_ratio_factor(Space(4, 5), 2, 1, GROW_BOTH) == Fraction(1, 4)
    assert volume_ratio_factor(Space(6, 4), 3, 2, GROW_BOTH) == Fraction(5, 12) ** 2
    assert volume_ratio_factor(Space(5, 6), 2, 1, GROW_BOTH) == Fraction(3, 7)


def test_ratio_factor_grow_radius():
    factor = volume_ratio_factor(Space(4, 2), 1, 1, GROW_RADIUS)
    assert factor == Fraction(2, 4) * Fraction(2, 1)
    assert ball_volume(Space(4, 2), 1) <= factor * ball_volume(Space(4, 2), 2)


def test_ratio_factor_hypothesis_errors():
    space = Space(5, 6)
    with pytest.raises(DomainError):
        volume_ratio_factor(space, 0, 1, GROW_BOTH)
    with pytest.raises(DomainError):
        volume_ratio_factor(space, 2, 0, GROW_BOTH)
    with pytest.raises(DomainError):
        # odd-exceptional branch without a constant
        volume_ratio_factor(Space(5, 6), 3, 1, GROW_BOTH)
    with pytest.raises(DomainError):
        # grow_radius needs n - i + 1 - t >= 1
        volume_ratio_factor(Space(4, 2), 2, 2, GROW_RADIUS)
    with pytest.raises(DomainError):
        volume_ratio_factor(space, 2, 1, "sideways")


def test_ratio_inequalities_small_grid():
    for m in (3, 4, 6, 7):
        for n in (2, 3, 4):
            space = Space(m, n)
            for t in range(1, space.max_weight + 1):
                cm = Fraction(4) if m % 2 and t == (m + 1) // 2 else None
                for i in (1, 2):
                    assert ratio_inequality_holds(space, t, i, GROW_BOTH, cm)
                    if i <= min(space.max_weight - t, n - t):
                        assert ratio_inequality_holds(space, t, i, GROW_RADIUS, cm)


def test_ratio_inequality_fails_for_modulus_two():
    # v_2(2,1) = 3 > (1/3) v_2(3,2) = 7/3; recorded, not asserted
    assert not ratio_inequality_holds(Space(2, 2), 1, 1, GROW_BOTH)


def test_estimate_constant_cm():
    estimate = estimate_constant_cm(3, range(3, 9))
    assert estimate.t == 2
    assert estimate.value > 0
    for n in range(3, 8):
        space = Space(3, n)
        assert ratio_inequality_holds(space, 2, 1, GROW_BOTH, estimate.value)
    estimate5 = estimate_constant_cm(5, range(3, 9))
    assert estimate5.value > 0


def test_estimate_constant_cm_errors():
    with pytest.raises(DomainError):
        estimate_constant_cm(4, range(3, 8))  # even modulus
    with pytest.raises(DomainError):
        estimate_constant_cm(5, [])  # empty range
    with pytest.raises(ConstantSearchError) as info:
        estimate_constant_cm(5, range(3, 9), search_cap=0)
    assert info.value.counterexample is None or "n" in info.value.counterexample
