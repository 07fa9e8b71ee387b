"""Head-to-head comparison of the two count bounds on error-correcting codes.

Column A is the container-style exponent (1+eps) * m^n / v(n,t): the
container machinery certifies at most 2^A codes of minimum distance 2t+1.
Column B is the exponent of the bipartite-derived count bound

    sum_{S=0}^{floor(H)} [ C(m^n, S) - LB(S) ]

where LB(S) is the counting lower bound on size-S codes of minimum distance
<= 2t and the truncation at floor(H) is licensed by the sphere-packing
bound (no larger code exists).  For small caps the sum is computed exactly;
for large caps B is reported as an estimate together with a certified
rational lower bound, and the which-is-smaller verdict always uses certified
exact-rational comparisons only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import Space, binom
from .density import nonlinear_code_bounds, nonlinear_correction
from .errors import DomainError
from .volumes import ball_volume

EXACT_SUM_CAP = 64  # largest size cap summed term by term
_LOG_DENOM = 64  # denominator used by certified dyadic logarithms


def floor_log2(x: Fraction) -> int:
    """Largest e with 2^e <= x, exact."""
    if x <= 0:
        raise DomainError("floor_log2 needs a positive value")
    num, den = x.numerator, x.denominator
    e = num.bit_length() - den.bit_length()
    # e is within 1 of the answer; fix up exactly
    if e >= 0:
        if (den << e) > num:
            e -= 1
        elif (den << (e + 1)) <= num:
            e += 1
    else:
        if den > (num << -e):
            e -= 1
        elif den <= (num << (-e - 1)):
            e += 1
    return e


def log2_lower(x: Fraction, denom: int = _LOG_DENOM) -> Fraction:
    """Certified dyadic lower bound u/denom <= log2(x)."""
    if x <= 0:
        raise DomainError("log2_lower needs a positive value")
    power = x**denom
    return Fraction(floor_log2(power), denom)


def log2_float(x: Fraction) -> float:
    """log2 of a positive rational with big-integer support (display only)."""
    num, den = x.numerator, x.denominator

    def _log2_int(v: int) -> float:
        shift = max(v.bit_length() - 64, 0)
        return shift + math.log2(v >> shift)

    return _log2_int(num) - _log2_int(den)


@dataclass(frozen=True)
class CompareCell:
    m: int
    n: int
    t: int
    epsilon: Fraction
    hamming: Fraction  # H = m^n / v(n,t)
    size_cap: int  # floor(H); no code of distance 2t+1 is larger
    container_exponent: Fraction  # A = (1+eps) H, bits
    bipartite_lower: Fraction  # certified lower bound on B, bits
    bipartite_estimate: float  # display estimate of B, bits
    bipartite_exact: Fraction | None  # log2 argument (the sum) when computed exactly
    container_sharper: bool  # certified: A < bipartite_lower
    size: int | None = None  # set in per-size mode


def _upper_term(space: Space, size: int, t: int) -> Fraction:
    """C(m^n, S) minus the counting lower bound: an upper bound on the
    number of size-S codes with minimum distance >= 2t+1."""
    total = binom(space.size, size)
    if size < 2:
        return Fraction(total)
    return total - nonlinear_code_bounds(space, size, t).lower


def _lb_ratio(space: Space, size: int, t: int) -> Fraction:
    """LB(S) / C(m^n, S) without forming the huge binomials."""
    big_n = space.size
    _, _, theta = nonlinear_correction(space, size, t)
    # scale/theta over C(N,S) with scale = N(v-1)/2 * C(N-2, S-2)
    v2 = ball_volume(space, 2 * t)
    ratio = Fraction(big_n * (v2 - 1), 2) * Fraction(
        size * (size - 1), big_n * (big_n - 1)
    )
    return ratio / theta


def compare_cell(
    m: int, n: int, t: int, epsilon: Fraction, size: int | None = None
) -> CompareCell:
    space = Space(m, n)
    if not 1 <= t <= space.max_weight:
        raise DomainError(f"radius t out of range [1, {space.max_weight}]")
    epsilon = Fraction(epsilon)
    volume = ball_volume(space, t)
    hamming = Fraction(space.size, volume)
    exponent_a = (1 + epsilon) * hamming
    cap = int(hamming)  # floor; H >= 1 always

    if size is not None:
        return _per_size_cell(space, t, epsilon, hamming, exponent_a, cap, size)

    if cap <= EXACT_SUM_CAP:
        total = sum(_upper_term(space, s, t) for s in range(cap + 1))
        lower = Fraction(floor_log2(total))
        estimate = log2_float(total)
        exact: Fraction | None = total
    else:
        lower, estimate = _large_cap_bounds(space, t, cap)
        exact = None
    return CompareCell(
        m=m,
        n=n,
        t=t,
        epsilon=epsilon,
        hamming=hamming,
        size_cap=cap,
        container_exponent=exponent_a,
        bipartite_lower=lower,
        bipartite_estimate=estimate,
        bipartite_exact=exact,
        container_sharper=exponent_a < lower,
    )


def _per_size_cell(space, t, epsilon, hamming, exponent_a, cap, size) -> CompareCell:
    if not 0 <= size <= space.size:
        raise DomainError(f"size out of range [0, {space.size}]")
    if size > 5000:
        raise DomainError("per-size mode supports sizes up to 5000")
    term = _upper_term(space, size, t)
    if term <= 0:
        # no code of this size exists at the required distance
        lower = Fraction(0)
        estimate = float("-inf")
        exact = term
    else:
        lower = Fraction(floor_log2(term))
        estimate = log2_float(term)
        exact = term
    return CompareCell(
        m=space.m,
        n=space.n,
        t=t,
        epsilon=epsilon,
        hamming=hamming,
        size_cap=cap,
        container_exponent=exponent_a,
        bipartite_lower=lower,
        bipartite_estimate=estimate,
        bipartite_exact=exact,
        container_sharper=exponent_a < lower,
        size=size,
    )


def _large_cap_bounds(space: Space, t: int, cap: int) -> tuple[Fraction, float]:
    """Certified lower bound and float estimate for
    log2 sum_{S<=cap} [C(N,S) - LB(S)] when the cap is too large to sum.

    The sum dominates each of its terms; each candidate term gives the
    certified bound C(N,S) (1 - LB(S)/C(N,S)) >= (N/S)^S (1 - ratio), whose
    log is bounded below by dyadic rationals.
    """
    big_n = space.size
    best: Fraction | None = None
    candidates = {cap, cap - 1, cap // 2, max(2, cap // 4), 2, 1}
    for s in sorted(candidates, reverse=True):
        if s < 1 or s > cap:
            continue
        if s == 1:
            cand = Fraction(floor_log2(Fraction(1 + big_n)))
        else:
            ratio = _lb_ratio(space, s, t)
            remainder = 1 - ratio
            if remainder <= 0:
                continue
            cand = s * log2_lower(Fraction(big_n, s)) + floor_log2(remainder)
        if best is None or cand > best:
            best = cand
    if best is None:
        best = Fraction(floor_log2(Fraction(1 + big_n)))

    # display estimate: the S = cap term dominates; neighbouring terms decay
    # by roughly v(n,t), bounded by the geometric tail correction
    ratio_cap = _lb_ratio(space, cap, t)
    log_term = (
        (
            math.lgamma(big_n + 1)
            - math.lgamma(cap + 1)
            - math.lgamma(big_n - cap + 1)
        )
        / math.log(2)
    )
    if ratio_cap < 1:
        log_term += log2_float(1 - ratio_cap)
    tail = Fraction(big_n - cap + 1, big_n - 2 * cap + 1) if 2 * cap < big_n else 2
    estimate = log_term + math.log2(float(tail))
    return best, estimate


def compare_table(
    m: int,
    t_max: int,
    n_max: int,
    epsilon: Fraction,
    size: int | None = None,
    n_min: int = 1,
) -> list[CompareCell]:
    """One cell per (n, t) with 1 <= t <= min(t_max, n*floor(m/2))."""
    if t_max < 1 or n_max < n_min or n_min < 1:
        raise DomainError("need t_max >= 1 and n_max >= n_min >= 1")
    cells = []
    half = m // 2
    for n in range(n_min, n_max + 1):
        for t in range(1, t_max + 1):
            if t > n * half:
                continue
            cells.append(compare_cell(m, n, t, epsilon, size=size))
    return cells
