"""Upper bounds on code size and exact maximum code size at desk scale.

All bound values are exact rationals and every hypothesis is decided in
exact arithmetic; no floating point enters any comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .config import check_cap
from .core import Space, average_lee_weight
from .errors import DomainError
from .volumes import ball_volume

ELIAS_PRESET_SHIFT = 7  # auxiliary radius preset r = t + 7


@dataclass
class BoundReport:
    """Evaluation record for a bound: value, hypothesis status, inputs."""

    name: str
    value: Fraction | None
    hypotheses_ok: bool
    parameters: dict = field(default_factory=dict)
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class LogBound:
    """A bound of the form base**exponent, kept in log form because the
    exponent is generally non-integral."""

    base: int
    exponent: Fraction

    def value_float(self) -> float:
        return float(self.base) ** float(self.exponent)


@dataclass(frozen=True)
class GvCertificate:
    """Smallest packing radius certifying the sphere-covering condition."""

    t: int
    volume: int
    required_exponent: Fraction  # n(1-R); condition is v(n, 2t) >= m^(n(1-R))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def hamming_bound(space: Space, t: int) -> Fraction:
    """Sphere-packing bound m^n / v(n, t) on codes of minimum distance 2t+1."""
    if not 0 <= t <= space.max_weight:
        raise DomainError(f"radius {t} out of range [0, {space.max_weight}]")
    return Fraction(space.size, ball_volume(space, t))


def plotkin_like_bound(p: int, s: int, n: int, t: int) -> LogBound:
    """Averaging bound for free linear codes over Z_{p^s}, p >= 3 prime:
    size <= p^(s(n - (8t+4)/(p^s+1) + 1)), returned in log form."""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if p == 2:
        raise DomainError("the averaging bound requires p >= 3")
    if s < 1:
        raise DomainError("exponent s must be >= 1")
    if n < 1 or t < 0:
        raise DomainError("need n >= 1 and t >= 0")
    q = p**s
    exponent = s * (n - Fraction(8 * t + 4, q + 1) + 1)
    return LogBound(base=p, exponent=exponent)


def elias_bound(space: Space, d: int, r: int) -> BoundReport:
    """Elias-style bound via the average weight inside a radius-r ball.

    Hypotheses (checked exactly): r <= theta*n and
    r^2 - 2*theta*n*r + theta*n*d > 0.  On failure the report carries
    hypotheses_ok = False and no value.
    """
    if d < 1:
        raise DomainError("distance must be >= 1")
    if r < 0:
        raise DomainError("auxiliary radius must be >= 0")
    theta = average_lee_weight(space.m)
    tn = theta * space.n
    denominator = r * r - 2 * tn * r + tn * d
    params = {"m": space.m, "n": space.n, "d": d, "r": r, "theta": theta}
    ok = r <= tn and denominator > 0
    if not ok:
        return BoundReport("elias", None, False, params)
    value = (tn * d / denominator) * Fraction(space.size, ball_volume(space, r))
    return BoundReport("elias", value, True, params)


def elias_bound_preset(space: Space, t: int) -> BoundReport:
    """Elias bound at the preset auxiliary radius r = t + 7 for distance
    d = 2t + 1."""
    report = elias_bound(space, 2 * t + 1, t + ELIAS_PRESET_SHIFT)
    report.name = "elias_preset"
    report.parameters["t"] = t
    return report


def gv_radius(space: Space, rate: Fraction) -> GvCertificate:
    """Smallest t with v(n, 2t) >= m^(n(1-R)), i.e. the first packing radius
    certifying the sphere-covering condition at rate R.  Decided exactly by
    cross-multiplied integer powers."""
    rate = Fraction(rate)
    if not 0 <= rate < 1:
        raise DomainError("rate must lie in [0, 1)")
    n, m = space.n, space.m
    required = n * (1 - rate)
    a, b = required.numerator, required.denominator
    t = 0
    while True:
        vol = ball_volume(space, 2 * t)
        if vol**b >= m**a:
            return GvCertificate(t=t, volume=vol, required_exponent=required)
        t += 1


# ---------------------------------------------------------------------------
# Exact maximum code size by branch and bound.
# ---------------------------------------------------------------------------


def distance_ball_offsets(m: int, n: int, radius: int) -> list[tuple[int, ...]]:
    """Coordinate tuples of all nonzero words of Z_m^n with weight <= radius."""
    wt = [min(v, m - v) for v in range(m)]
    out: list[tuple[int, ...]] = []
    stack: list[int] = []

    def gen(pos: int, weight_left: int) -> None:
        if pos == n:
            if any(stack):
                out.append(tuple(stack))
            return
        for v in range(m):
            w = wt[v]
            if w <= weight_left:
                stack.append(v)
                gen(pos + 1, weight_left - w)
                stack.pop()

    gen(0, radius)
    return out


def _distance_ball_adjacency(m: int, n: int, radius: int) -> list[int]:
    """Bitmask adjacency of the graph on Z_m^n joining words at Lee distance
    in [1, radius]; node index encodes coordinates base m, most significant
    first."""
    size = m**n
    offsets = distance_ball_offsets(m, n, radius)
    powers = [m ** (n - 1 - i) for i in range(n)]
    neighbors = [0] * size
    for x in range(size):
        digits = []
        xx = x
        for _ in range(n):
            xx, dd = divmod(xx, m)
            digits.append(dd)
        digits.reverse()
        acc = 0
        for off in offsets:
            y = 0
            for i in range(n):
                y += ((digits[i] + off[i]) % m) * powers[i]
            acc |= 1 << y
        neighbors[x] = acc
    return neighbors


@lru_cache(maxsize=None)
def _circular_independence_table(m: int, radius: int) -> tuple[int, ...]:
    # table[mask] = largest subset of the residues in `mask` that is pairwise
    # more than `radius` apart in circular (Lee) distance on Z_m
    closed = []
    for v in range(m):
        bits = 1 << v
        for u in range(m):
            diff = (u - v) % m
            if min(diff, m - diff) <= radius:
                bits |= 1 << u
        closed.append(bits)
    table = [0] * (1 << m)
    for mask in range(1, 1 << m):
        v = (mask & -mask).bit_length() - 1
        table[mask] = max(table[mask & (mask - 1)], 1 + table[mask & ~closed[v]])
    return tuple(table)


def _greedy_independent(neighbors: list[int], mask: int) -> int:
    size = 0
    while mask:
        best_v = -1
        best_d = None
        mm = mask
        while mm:
            v = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            d = (neighbors[v] & mask).bit_count()
            if best_d is None or d < best_d:
                best_v, best_d = v, d
        mask &= ~(neighbors[best_v] | (1 << best_v))
        size += 1
    return size


def _clique_cover_bound(neighbors: list[int], mask: int) -> int:
    bound = 0
    while mask:
        v = (mask & -mask).bit_length() - 1
        clique = 1 << v
        cand = mask & neighbors[v]
        while cand:
            u = (cand & -cand).bit_length() - 1
            clique |= 1 << u
            cand &= neighbors[u]
        mask &= ~clique
        bound += 1
    return bound


def _max_independent_set(neighbors: list[int], line_bound=None) -> int:
    n = len(neighbors)
    full = (1 << n) - 1
    best = _greedy_independent(neighbors, full)

    def bound(mask: int) -> int:
        b = _clique_cover_bound(neighbors, mask)
        if line_bound is not None:
            b = min(b, line_bound(mask))
        return b

    def expand(mask: int, size: int) -> None:
        nonlocal best
        # safe reductions: vertices of masked degree 0 or 1 can be taken
        reduced = True
        while reduced and mask:
            reduced = False
            mm = mask
            while mm:
                v = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                if not mask >> v & 1:
                    continue  # removed earlier in this sweep
                deg_mask = neighbors[v] & mask
                deg = deg_mask.bit_count()
                if deg == 0:
                    mask &= ~(1 << v)
                    size += 1
                    reduced = True
                elif deg == 1:
                    mask &= ~((1 << v) | deg_mask)
                    size += 1
                    reduced = True
        if not mask:
            if size > best:
                best = size
            return
        if size + bound(mask) <= best:
            return
        # branch over the closed neighborhood of a minimum-degree vertex:
        # every maximum independent set inside `mask` meets it
        pick = -1
        pick_deg = None
        mm = mask
        while mm:
            v = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            d = (neighbors[v] & mask).bit_count()
            if pick_deg is None or d < pick_deg:
                pick, pick_deg = v, d
        branch_vertices = [pick]
        nb = neighbors[pick] & mask
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            branch_vertices.append(u)
        excluded = 0
        for u in branch_vertices:
            expand(mask & ~(neighbors[u] | (1 << u) | excluded), size + 1)
            excluded |= 1 << u
            if size + bound(mask & ~excluded) <= best:
                break

    expand(full, 0)
    return best


@lru_cache(maxsize=None)
def max_code_size_exact(space: Space, d: int) -> int:
    """Maximum size of a code in Z_m^n with minimum Lee distance >= d,
    by exact branch-and-bound maximum-independent-set search on the graph
    whose edges join words at distance < d.

    Size-1 codes have no defined minimum distance; 1 is returned when no
    pair at distance >= d exists.  Deterministic: nodes are ordered by
    descending degree with lexicographic ties (all degrees are equal here,
    so the order is lexicographic) and all tie-breaks are by that order.
    """
    if d < 1:
        raise DomainError("distance must be >= 1")
    if d == 1:
        return space.size
    if d > space.max_weight:
        return 1
    check_cap("mis_nodes", space.size, f"maximum-code search on {space}")
    m, n = space.m, space.n
    radius = d - 1
    size = space.size

    neighbors = _distance_ball_adjacency(m, n, radius)

    # per-line exact independence bound: nodes sharing all but the last
    # coordinate form a circulant with circular distance <= radius edges
    table = _circular_independence_table(m, min(radius, m // 2))
    full_line = (1 << m) - 1
    line_count = size // m

    def line_bound(mask: int) -> int:
        total = 0
        for line in range(line_count):
            sub = (mask >> (line * m)) & full_line
            if sub:
                total += table[sub]
        return total

    return _max_independent_set(neighbors, line_bound=line_bound)
