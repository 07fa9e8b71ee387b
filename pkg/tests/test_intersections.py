import itertools
from fractions import Fraction

import pytest

from leelab import (
    DomainError,
    Space,
    Word,
    ball_volume,
    common_neighborhood_count,
    intersection_closed_form_dist1,
    intersection_estimate,
    intersection_size,
    intersection_upper_bound,
    lee_distance,
)
from leelab.intersections import (
    canonical_center,
    scheme_intersection_number,
    word_with_composition,
)
from leelab.core import lee_composition


def brute_intersection(m, n, t, c1, c2):
    count = 0
    for z in itertools.product(range(m), repeat=n):
        d1 = sum(min((a - b) % m, (b - a) % m) for a, b in zip(z, c1))
        d2 = sum(min((a - b) % m, (b - a) % m) for a, b in zip(z, c2))
        if d1 <= t and d2 <= t:
            count += 1
    return count


def test_canonical_center():
    assert canonical_center(Space(5, 3), 5).coords == (2, 2, 1)
    assert canonical_center(Space(4, 2), 1).coords == (1, 0)
    assert canonical_center(Space(4, 2), 0).coords == (0, 0)
    with pytest.raises(DomainError):
        canonical_center(Space(4, 2), 5)
    with pytest.raises(DomainError):
        canonical_center(Space(4, 2), -1)


def test_intersection_size_examples():
    assert intersection_size(Space(4, 2), 1, 1) == 2
    assert intersection_size(Space(4, 2), 1, 3) == 0
    assert intersection_size(Space(3, 2), 1, 2) == 2
    # brute force against the same canonical centers
    assert brute_intersection(4, 2, 1, (0, 0), (1, 0)) == 2
    assert brute_intersection(3, 2, 1, (0, 0), (1, 1)) == 2


def test_intersection_size_matches_brute_force_on_canonical_centers():
    for m in (3, 4, 5, 6):
        for n in (2, 3):
            space = Space(m, n)
            for t in range(1, min(4, space.max_weight) + 1):
                for ell in range(0, min(2 * t, space.max_weight) + 1):
                    c2 = canonical_center(space, ell)
                    assert intersection_size(space, t, ell) == brute_intersection(
                        m, n, t, (0,) * n, c2.coords
                    )


def test_common_neighborhood_examples():
    space = Space(4, 2)
    x = Word(space, (0, 0))
    assert common_neighborhood_count(x, x, 2) == ball_volume(space, 2)
    assert common_neighborhood_count(x, Word(space, (1, 0)), 2) == 8
    # translated pair at the same difference
    assert common_neighborhood_count(Word(space, (2, 1)), Word(space, (3, 1)), 2) == 8


def test_common_neighborhood_space_mismatch():
    with pytest.raises(DomainError):
        common_neighborhood_count(Word(Space(4, 2), (0, 0)), Word(Space(5, 2), (0, 0)), 1)


def test_composition_invariance_and_distance_collapse():
    # the count is a function of the composition of the difference; for
    # m <= 4 compositions at equal distance give equal counts, while m = 5
    # separates them
    space = Space(5, 2)
    zero = Word(space, (0, 0))
    a = common_neighborhood_count(zero, Word(space, (2, 0)), 1)
    b = common_neighborhood_count(zero, Word(space, (1, 1)), 1)
    assert (a, b) == (1, 2)  # same distance, different compositions
    space4 = Space(4, 2)
    zero4 = Word(space4, (0, 0))
    assert common_neighborhood_count(
        zero4, Word(space4, (2, 0)), 1
    ) == common_neighborhood_count(zero4, Word(space4, (1, 1)), 1)


def test_common_neighborhood_matches_oracle_on_matching_composition():
    for m in (3, 4, 5):
        space = Space(m, 3)
        zero = Word.zero(space)
        for t in (1, 2):
            for ell in range(0, min(2 * t, space.max_weight) + 1):
                c2 = canonical_center(space, ell)
                assert common_neighborhood_count(zero, c2, t) == intersection_size(
                    space, t, ell
                )


def test_monotone_and_vanishing_small():
    for m in (3, 4, 5):
        for n in (2, 3):
            space = Space(m, n)
            for t in (1, 2):
                ell_hi = min(2 * t, space.max_weight - 1)
                values = [intersection_size(space, t, ell) for ell in range(1, ell_hi + 1)]
                assert all(a >= b for a, b in zip(values, values[1:]))
                assert all(v > 0 for v in values)
                for ell in range(2 * t + 1, min(space.max_weight, 2 * t + 2) + 1):
                    assert intersection_size(space, t, ell) == 0


def test_coincident_centers():
    for m in (3, 4, 5):
        space = Space(m, 2)
        for t in range(0, space.max_weight + 1):
            assert intersection_size(space, t, 0) == ball_volume(space, t)


def test_closed_form_dist1_examples():
    assert intersection_closed_form_dist1(Space(4, 2), 1) == 2
    assert intersection_closed_form_dist1(Space(4, 2), 2) == 8
    assert intersection_closed_form_dist1(Space(5, 2), 1) == 2


def test_closed_form_dist1_matches_oracle():
    for m in range(3, 8):
        for n in (2, 3):
            space = Space(m, n)
            for t in range(1, min(5, space.max_weight) + 1):
                assert intersection_closed_form_dist1(space, t) == intersection_size(
                    space, t, 1
                )


def test_upper_bound_examples():
    assert intersection_upper_bound(Space(4, 2), 1, 1) == 4
    assert intersection_upper_bound(Space(4, 2), 2, 1) == 12
    assert intersection_upper_bound(Space(3, 3), 2, 2) == 45


def test_upper_bound_validity_small():
    for m in (3, 4, 5):
        for n in (2, 3):
            space = Space(m, n)
            for t in (1, 2):
                for ell in range(1, min(2 * t, space.max_weight - 1) + 1):
                    if (ell + 1) // 2 <= n:
                        assert intersection_upper_bound(space, t, ell) >= intersection_size(
                            space, t, ell
                        )


def test_upper_bound_hypotheses():
    with pytest.raises(DomainError):
        intersection_upper_bound(Space(4, 2), 1, 0)
    with pytest.raises(DomainError):
        intersection_upper_bound(Space(4, 2), 1, 3)  # beyond 2t
    with pytest.raises(DomainError):
        # ceil(l/2) > n: the coordinate-splitting argument breaks down
        intersection_upper_bound(Space(6, 2), 3, 5)


def test_estimate_examples():
    space = Space(4, 8)
    v = ball_volume(space, 2)
    assert intersection_estimate(space, 2, 1) == Fraction(v, 2)
    assert intersection_estimate(space, 2, 3) == Fraction(v, 4)
    space7 = Space(7, 10)
    assert intersection_estimate(space7, 3, 1) == Fraction(21, 10) * ball_volume(space7, 3)


def test_estimate_hypotheses():
    with pytest.raises(DomainError):
        intersection_estimate(Space(4, 8), 2, 2)  # even distance
    with pytest.raises(DomainError):
        intersection_estimate(Space(4, 8), 2, 5)  # (d-1)/2 >= t
    with pytest.raises(DomainError):
        intersection_estimate(Space(3, 8), 2, 1)  # floor(m/4) = 0
    with pytest.raises(DomainError):
        intersection_estimate(Space(5, 8), 3, 1)  # odd-exceptional, no constant
    value = intersection_estimate(Space(5, 8), 3, 1, cm=Fraction(3))
    assert value == Fraction(5 * 3, 8) * ball_volume(Space(5, 8), 3)


def test_estimate_dominates_oracle_small():
    for m, n in ((4, 3), (5, 3), (7, 2)):
        space = Space(m, n)
        for t in (1, 2, 3):
            if t > space.max_weight:
                continue
            limit = min(t, n * (m // 4))
            for half_ell in range(limit):
                ell = 2 * half_ell + 1
                if ell > min(2 * t, space.max_weight - 1):
                    continue
                cm = Fraction(4) if m % 2 and t == (m + 1) // 2 else None
                est = intersection_estimate(space, t, ell, cm=cm)
                assert est >= intersection_size(space, t, ell)


def test_scheme_intersection_number_consistency():
    # summing the brute-force class counts over all composition pairs of
    # weight <= r reproduces the common-neighborhood count
    space = Space(4, 2)
    zero = Word.zero(space)
    comps = {}
    for word in itertools.product(range(4), repeat=2):
        w = Word(space, word)
        comps.setdefault(lee_composition(w).counts, w)
    ck = lee_composition(Word(space, (1, 0)))
    y = word_with_composition(space, ck)
    r = 1
    total = 0
    for ci_counts, wi in comps.items():
        if wi.weight() > r:
            continue
        for cj_counts, wj in comps.items():
            if wj.weight() > r:
                continue
            total += scheme_intersection_number(
                space,
                lee_composition(wi),
                lee_composition(wj),
                ck,
            )
    assert total == common_neighborhood_count(zero, y, r)
