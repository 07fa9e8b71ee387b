"""Lee ball volumes: DP oracle, printed closed forms, bounds, ratio estimates.

The dynamic-programming oracle `ball_volume` is the repository-wide ground
truth.  The closed forms are evaluated verbatim for reconciliation: the
even-modulus branch agrees with the oracle everywhere we test, the
odd-modulus branch does not (the verify suite reports the mismatches rather
than patching them).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .core import Space, binom
from .errors import ConstantSearchError, DomainError

GROW_BOTH = "grow_both"
GROW_RADIUS = "grow_radius"

BRANCH_EVEN = "even"
BRANCH_ODD_EXCEPTIONAL = "odd_exceptional"
BRANCH_GENERIC = "generic"


@lru_cache(maxsize=None)
def _coordinate_weight_counts(m: int) -> tuple[int, ...]:
    # counts[w] = number of residues in Z_m of Lee weight w
    half = m // 2
    counts = [2] * (half + 1)
    counts[0] = 1
    if m % 2 == 0:
        counts[half] = 1
    return tuple(counts)


@lru_cache(maxsize=None)
def weight_distribution(m: int, n: int) -> tuple[int, ...]:
    """Number of words of Z_m^n at each Lee weight 0..n*floor(m/2)."""
    per_coord = _coordinate_weight_counts(m)
    dist = [1]
    for _ in range(n):
        new = [0] * (len(dist) + len(per_coord) - 1)
        for total, count in enumerate(dist):
            if count:
                for w, c in enumerate(per_coord):
                    new[total + w] += count * c
        dist = new
    return tuple(dist)


def _volume(m: int, n: int, r: int) -> int:
    # n = 0 is permitted here so intersection formulas need no case analysis
    if r < 0:
        return 0
    if n == 0:
        return 1
    half = m // 2
    if r >= n * half:
        return m**n
    dist = weight_distribution(m, n)
    return sum(dist[: r + 1])


def ball_volume(space: Space, radius: int) -> int:
    """Exact number of words within Lee distance `radius` of a fixed center.

    Center-independent.  Negative radii give 0 and radii at or above
    n*floor(m/2) give m^n, so downstream formulas can be evaluated without
    clamping.
    """
    return _volume(space.m, space.n, radius)


def ball_volume_closed_form(space: Space, radius: int) -> int:
    """The printed closed forms for the ball volume, evaluated verbatim.

    Even modulus:   sum_{i=0}^{floor(2r/m)} (-1)^i C(n,i)
                      sum_{j=0}^{r - (m/2) i} 2^j C(n,j) C(r - (m/2) i, j)
    Odd modulus:    sum_{i=0}^{r} C(n+1,i)
                      sum_{j=0}^{floor(2r/m)} (-2)^j C(n,j)
                        C(n-j, r - j (floor(m/2)+1) - i)

    Degenerate binomials are zero.  The odd branch is known to disagree with
    the oracle at some parameters; use `closed_form_report` to compare.
    """
    m, n = space.m, space.n
    if not 0 <= radius <= space.max_weight:
        raise DomainError(f"radius {radius} out of range [0, {space.max_weight}]")
    r = radius
    if m % 2 == 0:
        total = 0
        for i in range(2 * r // m + 1):
            inner_limit = r - (m // 2) * i
            inner = sum(
                2**j * binom(n, j) * binom(inner_limit, j)
                for j in range(inner_limit + 1)
            )
            total += (-1) ** i * binom(n, i) * inner
        return total
    half = m // 2
    total = 0
    for i in range(r + 1):
        inner = sum(
            (-2) ** j * binom(n, j) * binom(n - j, r - j * (half + 1) - i)
            for j in range(2 * r // m + 1)
        )
        total += binom(n + 1, i) * inner
    return total


@dataclass(frozen=True)
class ClosedFormRow:
    radius: int
    oracle: int
    closed_form: int

    @property
    def agree(self) -> bool:
        return self.oracle == self.closed_form


def closed_form_report(space: Space) -> tuple[ClosedFormRow, ...]:
    """Oracle vs closed form at every radius of the space."""
    return tuple(
        ClosedFormRow(r, ball_volume(space, r), ball_volume_closed_form(space, r))
        for r in range(space.max_weight + 1)
    )


def volume_bounds(space: Space, radius: int) -> tuple[int, int]:
    """(lower, upper) with lower <= ball volume <= upper.

    upper = sum_i 2^i C(n,i) C(r,i); lower = C(n,r) 2^r for r < n, else 2^n.
    Requires m >= 3: for m = 2 the weight-r/one-per-coordinate word family
    that realizes the lower bound collapses (1 = m-1) and the stated lower
    bound exceeds the true volume.
    """
    m, n = space.m, space.n
    if m < 3:
        raise DomainError("volume_bounds requires modulus >= 3")
    if not 1 <= radius <= space.max_weight:
        raise DomainError(f"radius {radius} out of range [1, {space.max_weight}]")
    upper = sum(2**i * binom(n, i) * binom(radius, i) for i in range(n + 1))
    lower = binom(n, radius) * 2**radius if radius < n else 2**n
    return lower, upper


def lemma_branch(m: int, t: int) -> str:
    """Case split used by the ratio estimates and the container algorithms.

    even:             m even
    odd_exceptional:  m odd and t = ceil(m/2), where the ratio argument only
                      supports a 'sufficiently large' constant
    generic:          everything else
    """
    if m % 2 == 0:
        return BRANCH_EVEN
    if t == (m + 1) // 2:
        return BRANCH_ODD_EXCEPTIONAL
    return BRANCH_GENERIC


def volume_ratio_factor(
    space: Space,
    t: int,
    i: int,
    mode: str,
    cm: Fraction | None = None,
) -> Fraction:
    """Multiplicative factor F in the volume ratio estimates.

    grow_both:   v(n,t)   <= F * v(n+i, t+i)
    grow_radius: v(n,t)   <= F * v(n, t+i)     (1 <= i <= n*floor(m/2) - t)

    The factor depends on the branch (even / odd-exceptional / generic); the
    odd-exceptional branch needs an explicit constant `cm`, see
    `estimate_constant_cm`.  The asserted inequalities are known to fail for
    m = 2 even though the factor remains computable; the verify suite
    records the counterexample.
    """
    m, n = space.m, space.n
    if not 1 <= t <= space.max_weight:
        raise DomainError(f"radius {t} out of range [1, {space.max_weight}]")
    if i < 1:
        raise DomainError("shift i must be >= 1")
    branch = lemma_branch(m, t)
    if branch == BRANCH_ODD_EXCEPTIONAL and cm is None:
        raise DomainError(
            "odd modulus with t = ceil(m/2) needs a constant; "
            "supply cm or use estimate_constant_cm"
        )
    if mode == GROW_BOTH:
        if branch == BRANCH_EVEN:
            base = Fraction(t + i, 2 * (n + i))
        elif branch == BRANCH_ODD_EXCEPTIONAL:
            base = Fraction(cm) / (n + i)
        else:
            base = Fraction(t + i, n + i)
        return base**i
    if mode == GROW_RADIUS:
        if i > space.max_weight - t:
            raise DomainError(f"shift {i} exceeds n*floor(m/2) - t = {space.max_weight - t}")
        if n - i + 1 - t < 1:
            raise DomainError(
                "grow_radius needs n - i + 1 - t >= 1; the correction factor "
                "is undefined or non-positive otherwise"
            )
        correction = Fraction(n - i + 1, n - i + 1 - t) ** i
        if branch == BRANCH_EVEN:
            base = Fraction(t + i, 2 * n)
        elif branch == BRANCH_ODD_EXCEPTIONAL:
            base = Fraction(cm) / n
        else:
            base = Fraction(t + i, n)
        return base**i * correction
    raise DomainError(f"unknown mode {mode!r}")


def ratio_inequality_holds(
    space: Space, t: int, i: int, mode: str, cm: Fraction | None = None
) -> bool:
    """Exact check of the inequality certified by `volume_ratio_factor`."""
    factor = volume_ratio_factor(space, t, i, mode, cm)
    lhs = ball_volume(space, t)
    if mode == GROW_BOTH:
        rhs = factor * _volume(space.m, space.n + i, t + i)
    else:
        rhs = factor * ball_volume(space, t + i)
    return lhs <= rhs


@dataclass(frozen=True)
class CmEstimate:
    """An empirically validated constant for the odd-exceptional branch."""

    m: int
    t: int
    value: Fraction
    n_values: tuple[int, ...]
    cases_checked: int


def _odd_exceptional_cases(m: int, n_values: tuple[int, ...]):
    # Each case is (n, i, mode); t is fixed at ceil(m/2).
    t = (m + 1) // 2
    half = m // 2
    n_max = max(n_values)
    for n in n_values:
        for i in range(1, n_max - n + 1):
            yield n, i, GROW_BOTH
        radius_room = n * half - t
        for i in range(1, min(radius_room, n - t) + 1):
            yield n, i, GROW_RADIUS


def estimate_constant_cm(
    m: int,
    n_range,
    search_cap: int = 64,
    step: Fraction = Fraction(1, 4),
) -> CmEstimate:
    """Smallest constant on a step-grid validating every odd-exceptional
    ratio inequality over the supplied lengths.

    Scans c = step, 2*step, ... up to search_cap and returns the first c for
    which v(n,t) <= F(c) * v(...) holds for every length in n_range and
    every in-range shift, in both modes.  Raises ConstantSearchError (with
    the offending case) if nothing validates.
    """
    if m % 2 == 0 or m < 3:
        raise DomainError("the exceptional branch needs an odd modulus >= 3")
    n_values = tuple(sorted(set(int(n) for n in n_range)))
    if not n_values:
        raise DomainError("empty length range")
    t = (m + 1) // 2
    for n in n_values:
        if n < 2 or t > n * (m // 2):
            raise DomainError(f"length {n} does not admit radius t = {t}")
    cases = list(_odd_exceptional_cases(m, n_values))
    candidate = step
    last_failure = None
    while candidate <= search_cap:
        ok = True
        for n, i, mode in cases:
            space = Space(m, n)
            if not ratio_inequality_holds(space, t, i, mode, cm=candidate):
                ok = False
                last_failure = {"m": m, "t": t, "n": n, "i": i, "mode": mode, "c": candidate}
                break
        if ok:
            return CmEstimate(m, t, candidate, n_values, len(cases))
        candidate += step
    raise ConstantSearchError(
        f"no constant up to {search_cap} validates the odd-exceptional "
        f"inequalities for m = {m}",
        counterexample=last_failure,
    )
