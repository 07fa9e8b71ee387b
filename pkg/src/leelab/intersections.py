"""Sizes of intersections of two equal-radius Lee balls.

The brute-force counter `intersection_size` is the oracle; the closed form
for center distance 1, the volume-product upper bound and the rational
estimates are all checked against it.

Scheme invariance makes the size depend only on the Lee composition (the
weight histogram) of the difference of the centers.  That is strictly finer
than the distance: for m >= 5 two center pairs at the same distance can
meet in different numbers of words (in Z_5^2 with radius 1, centers at
difference (2,0) share 1 word but (1,1) share 2), while for m <= 4 the
counts collapse to distance classes.  The oracle therefore fixes one
canonical representative per distance (greedy floor(m/2)-packed), which is
what every W(t, l) in this package means; `common_neighborhood_count`
measures arbitrary pairs.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .config import check_cap
from .core import Composition, Space, Word, lee_composition
from .errors import DomainError
from .volumes import (
    BRANCH_EVEN,
    BRANCH_ODD_EXCEPTIONAL,
    _volume,
    ball_volume,
    lemma_branch,
)


def canonical_center(space: Space, distance: int) -> Word:
    """A fixed word of Lee weight `distance`: coordinates filled greedily
    with floor(m/2), remainder in the next coordinate."""
    if not 0 <= distance <= space.max_weight:
        raise DomainError(
            f"distance {distance} not realizable in {space} "
            f"(range [0, {space.max_weight}])"
        )
    half = space.half
    coords = []
    remaining = distance
    for _ in range(space.n):
        w = min(half, remaining)
        coords.append(w)
        remaining -= w
    return Word(space, tuple(coords))


@lru_cache(maxsize=None)
def _difference_weight_table(m: int) -> tuple[tuple[int, ...], ...]:
    # table[a][b] = Lee weight of (a - b) mod m
    return tuple(
        tuple(min((a - b) % m, (b - a) % m) for b in range(m)) for a in range(m)
    )


@lru_cache(maxsize=None)
def intersection_size(space: Space, radius: int, center_distance: int) -> int:
    """Exact size of the intersection of two radius-`radius` balls whose
    centers are Lee distance `center_distance` apart, with the second
    center fixed at the canonical greedy representative.

    Counts by enumerating the space with the centers 0 and
    canonical_center(space, center_distance).  For m <= 4 every center pair
    at this distance gives the same count; for larger moduli the count can
    vary with the composition of the difference and this canonical value is
    the one meant by W(t, l) throughout the package (see the module notes).
    Returns 0 without enumerating when the centers are too far apart for
    the balls to meet (center_distance > 2*radius, triangle inequality).
    """
    if not 0 <= radius <= space.max_weight:
        raise DomainError(f"radius {radius} out of range [0, {space.max_weight}]")
    c2 = canonical_center(space, center_distance)  # validates the distance
    if center_distance > 2 * radius:
        return 0
    check_cap("word_enum", space.size, f"intersection oracle on {space}")
    m = space.m
    wt = _difference_weight_table(m)
    rows = tuple(wt[c] for c in c2.coords)  # rows[i][z_i] = weight of (c2_i - z_i)
    wt0 = wt[0]
    count = 0
    for z in itertools.product(range(m), repeat=space.n):
        d1 = 0
        d2 = 0
        for i, zi in enumerate(z):
            d1 += wt0[zi]
            d2 += rows[i][zi]
        if d1 <= radius and d2 <= radius:
            count += 1
    return count


def common_neighborhood_count(x: Word, y: Word, radius: int) -> int:
    """Number of words within distance `radius` of both x and y, by direct
    enumeration.  Independent of the canonical-center oracle; depends on
    the pair only through the Lee composition of x - y, and agrees with
    intersection_size whenever that composition matches the canonical
    representative's (always for m <= 4)."""
    if x.space != y.space:
        raise DomainError("words live in different spaces")
    space = x.space
    if radius < 0:
        raise DomainError("radius must be nonnegative")
    check_cap("word_enum", space.size, f"common neighborhood on {space}")
    m = space.m
    wt = _difference_weight_table(m)
    rows_x = tuple(wt[c] for c in x.coords)
    rows_y = tuple(wt[c] for c in y.coords)
    count = 0
    for z in itertools.product(range(m), repeat=space.n):
        dx = 0
        dy = 0
        for i, zi in enumerate(z):
            dx += rows_x[i][zi]
            dy += rows_y[i][zi]
        if dx <= radius and dy <= radius:
            count += 1
    return count


def intersection_closed_form_dist1(space: Space, radius: int) -> int:
    """Closed form for the intersection size at center distance 1.

    Even m:  2 * sum_{i=1}^{m/2} v(n-1, t-i)
    Odd m:   2 * sum_{i=1}^{(m-1)/2} v(n-1, t-i) + v(n-1, t-(m-1)/2)

    Negative radii contribute zero volume.
    """
    m, n = space.m, space.n
    t = radius
    if n < 2:
        raise DomainError("length must be >= 2 for the distance-1 closed form")
    if not 1 <= t <= space.max_weight:
        raise DomainError(f"radius {t} out of range [1, {space.max_weight}]")
    if m % 2 == 0:
        return 2 * sum(_volume(m, n - 1, t - i) for i in range(1, m // 2 + 1))
    k = (m - 1) // 2
    return 2 * sum(_volume(m, n - 1, t - i) for i in range(1, k + 1)) + _volume(
        m, n - 1, t - k
    )


def intersection_upper_bound(space: Space, radius: int, center_distance: int) -> int:
    """Volume-product upper bound m^l * v(n - ceil(l/2), t - ceil(l/2)).

    Valid for 1 <= l <= min(2t, n*floor(m/2) - 1) with ceil(l/2) <= n; for
    larger center distances the underlying argument (which places the
    centers on distinct coordinates) breaks down and the formula is wrong,
    so that region is rejected.
    """
    t, ell = radius, center_distance
    n = space.n
    if not 1 <= ell <= min(2 * t, space.max_weight - 1):
        raise DomainError(
            f"center distance {ell} out of range "
            f"[1, min(2t, n*floor(m/2)-1) = {min(2 * t, space.max_weight - 1)}]"
        )
    shift = (ell + 1) // 2
    if shift > n:
        raise DomainError(
            f"center distance {ell} needs ceil(l/2) <= n = {n}; "
            "the bound does not apply"
        )
    return space.m**ell * _volume(space.m, n - shift, t - shift)


def intersection_estimate(
    space: Space,
    radius: int,
    center_distance: int,
    cm: Fraction | None = None,
) -> Fraction:
    """Rational upper estimate for odd center distances 2l+1.

    Even m:            (mt/2n)^(l+1) * v(n,t)
    Odd m, t=ceil(m/2): (m*cm/n)^(l+1) * v(n,t)   (constant required)
    Otherwise:         (mt/n)^(l+1) * v(n,t)

    Requires center_distance = 2l+1 with 0 <= l < min(t, n*floor(m/4)).
    """
    m, n = space.m, space.n
    t = radius
    if center_distance % 2 != 1 or center_distance < 1:
        raise DomainError("estimate applies to odd center distances only")
    ell = (center_distance - 1) // 2
    limit = min(t, n * (m // 4))
    if not ell < limit:
        raise DomainError(
            f"center distance {center_distance} needs (d-1)/2 < "
            f"min(t, n*floor(m/4)) = {limit}"
        )
    if not 1 <= t <= space.max_weight:
        raise DomainError(f"radius {t} out of range [1, {space.max_weight}]")
    branch = lemma_branch(m, t)
    if branch == BRANCH_EVEN:
        base = Fraction(m * t, 2 * n)
    elif branch == BRANCH_ODD_EXCEPTIONAL:
        if cm is None:
            raise DomainError("odd modulus with t = ceil(m/2) requires a constant cm")
        base = Fraction(m) * Fraction(cm) / n
    else:
        base = Fraction(m * t, n)
    return base ** (ell + 1) * ball_volume(space, t)


def word_with_composition(space: Space, composition: Composition) -> Word:
    """A canonical word whose weight histogram equals `composition`
    (residue w represents weight w, low weights in leading coordinates)."""
    counts = composition.counts
    if len(counts) != space.half + 1 or sum(counts) != space.n:
        raise DomainError(f"composition {counts} does not fit {space}")
    coords: list[int] = []
    for w, c in enumerate(counts):
        coords.extend([w] * c)
    return Word(space, tuple(coords))


def scheme_intersection_number(
    space: Space,
    comp_i: Composition,
    comp_j: Composition,
    comp_k: Composition,
) -> int:
    """Brute-force association-scheme parameter: the number of words z with
    composition(x - z) = comp_i and composition(y - z) = comp_j, for a fixed
    pair (x, y) with composition(x - y) = comp_k.

    The count is pair-independent; this routine fixes x = 0 and a canonical
    y.  No closed form is provided anywhere in the package.
    """
    x = Word.zero(space)
    y = word_with_composition(space, comp_k)
    check_cap("word_enum", space.size, f"scheme parameter on {space}")
    count = 0
    for coords in itertools.product(range(space.m), repeat=space.n):
        z = Word(space, coords)
        if lee_composition(x.sub(z)) == comp_i and lee_composition(y.sub(z)) == comp_j:
            count += 1
    return count
