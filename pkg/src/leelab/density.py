"""Bipartite counting bounds and exact density oracles for Lee metric codes.

Counting bounds for nonlinear codes of a fixed size and for linear codes of
a fixed dimension over a prime field, each sandwiching an exactly computed
oracle value at desk scale.  Densities are exact rationals; reported bounds
are clamped to [0,1] with the raw values retained.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .config import check_cap
from .container import build_lee_graph, independence_polynomial
from .core import Space, binom
from .bounds import is_prime
from .errors import DomainError
from .volumes import _volume, ball_volume


@dataclass(frozen=True)
class AssociationSpec:
    """A symmetric pair-classification on the left nodes of a bipartite
    graph, with the per-class co-neighborhood counts needed for isolated-
    node bounds.

    magnitude r: classes are 0..r with the diagonal in class r.
    class_sizes[l] = number of ordered left pairs in class l (sums to
    left_size^2); co_neighborhoods[l] = number of right nodes adjacent to
    both members of any class-l pair.
    """

    magnitude: int
    class_sizes: tuple[int, ...]
    co_neighborhoods: tuple[int, ...]
    left_size: int
    right_size: int

    def __post_init__(self) -> None:
        r = self.magnitude
        if r < 0:
            raise DomainError("magnitude must be >= 0")
        if len(self.class_sizes) != r + 1 or len(self.co_neighborhoods) != r + 1:
            raise DomainError("need one class size and one co-neighborhood per class")
        if sum(self.class_sizes) != self.left_size**2:
            raise DomainError("class sizes must sum to left_size^2")


def alpha_regular_bounds(spec: AssociationSpec) -> tuple[Fraction, Fraction]:
    """(lower, upper) bounds on the number of non-isolated right nodes.

    upper = |V| * W_r; lower = W_r^2 |V|^2 / sum_l W_l * |class l|.
    """
    w_top = spec.co_neighborhoods[spec.magnitude]
    if w_top <= 0:
        raise DomainError("the diagonal co-neighborhood count must be positive")
    upper = Fraction(spec.left_size * w_top)
    denom = sum(
        w * c for w, c in zip(spec.co_neighborhoods, spec.class_sizes)
    )
    lower = Fraction(w_top * w_top * spec.left_size * spec.left_size, denom)
    return lower, upper


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space over the
    p-element field; 0 outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


@dataclass(frozen=True)
class NonlinearCodeBounds:
    """Sandwich on the number of size-S codes with minimum distance <= 2t."""

    lower: Fraction
    upper: Fraction
    beta0: Fraction
    beta1: Fraction
    theta: Fraction


def nonlinear_correction(space: Space, size: int, t: int) -> tuple[Fraction, Fraction, Fraction]:
    """(beta0, beta1, theta) of the nonlinear counting sandwich, without
    forming the (possibly enormous) binomial scale factor.

    beta1 = 2 v(n,2t) - 4 and beta0 = m^n (v(n,2t)-1)/2 - 2 v(n,2t) + 3
    count the pairs-sharing-one/zero-codeword classes of the edge
    association; theta is the resulting correction and equals 1 at S = 2.
    """
    if size < 1:
        raise DomainError("code size must be >= 1")
    if t < 1:
        raise DomainError("t must be >= 1")
    big_n = space.size
    if big_n <= 3 and size >= 3:
        raise DomainError("the correction term needs m^n >= 4 when S >= 3")
    v2 = ball_volume(space, 2 * t)  # clamps to m^n when 2t covers the space
    beta0 = Fraction(big_n * (v2 - 1), 2) - 2 * v2 + 3
    beta1 = Fraction(2 * v2 - 4)
    if size >= 3:
        theta = (
            1
            + beta1 * Fraction(size - 2, big_n - 2)
            + beta0 * Fraction((size - 2) * (size - 3), (big_n - 2) * (big_n - 3))
        )
    else:
        theta = Fraction(1)
    return beta0, beta1, theta


def nonlinear_code_bounds(space: Space, size: int, t: int) -> NonlinearCodeBounds:
    """Counting sandwich for size-S codes whose minimum distance is <= 2t.

    At S = 2 both bounds coincide with the edge count of the Lee graph.
    """
    beta0, beta1, theta = nonlinear_correction(space, size, t)
    v2 = ball_volume(space, 2 * t)
    scale = Fraction(space.size * (v2 - 1), 2) * binom(space.size - 2, size - 2)
    return NonlinearCodeBounds(
        lower=scale / theta, upper=scale, beta0=beta0, beta1=beta1, theta=theta
    )


@dataclass(frozen=True)
class DensityBounds:
    """Clamped density sandwich with the raw (unclamped) values retained."""

    lower: Fraction
    upper: Fraction
    raw_lower: Fraction
    raw_upper: Fraction
    exact: Fraction | None
    parameters: tuple[tuple[str, object], ...]

    def __post_init__(self) -> None:
        if not 0 <= self.lower <= self.upper <= 1:
            raise DomainError("clamped bounds must satisfy 0 <= lower <= upper <= 1")


def _clamp01(x: Fraction) -> Fraction:
    return min(max(x, Fraction(0)), Fraction(1))


def nonlinear_density_bounds(
    space: Space, size: int, t: int, exact: Fraction | None = None
) -> DensityBounds:
    """Density of size-S codes with minimum distance >= 2t+1 among all
    size-S codes, sandwiched via the counting bounds."""
    if not 2 <= size <= space.size:
        raise DomainError(f"code size must lie in [2, {space.size}]")
    counts = nonlinear_code_bounds(space, size, t)
    total = binom(space.size, size)
    raw_lower = 1 - counts.upper / total
    raw_upper = 1 - counts.lower / total
    return DensityBounds(
        lower=_clamp01(raw_lower),
        upper=_clamp01(raw_upper),
        raw_lower=raw_lower,
        raw_upper=raw_upper,
        exact=exact,
        parameters=(("m", space.m), ("n", space.n), ("S", size), ("t", t)),
    )


def nonlinear_density_exact(space: Space, size: int, t: int) -> Fraction:
    """Exact density via the size-S coefficient of the independence
    polynomial of the Lee graph."""
    if not 1 <= size <= space.size:
        raise DomainError(f"code size must lie in [1, {space.size}]")
    if t < 1:
        raise DomainError("t must be >= 1")
    graph = build_lee_graph(space, t)
    poly = independence_polynomial(graph)
    good = poly[size] if size < len(poly) else 0
    return Fraction(good, binom(space.size, size))


def linear_code_bounds(p: int, n: int, k: int, t: int) -> tuple[Fraction, Fraction]:
    """Sandwich on the number of k-dimensional linear codes in Z_p^n with
    minimum Lee distance <= 2t.

    upper = (v-1) [n-1,k-1]_p;
    lower = (v-1) [n-1,k-1]_p^2 / ([n-2,k-2]_p (v-p) + [n-1,k-1]_p (p-1)),
    with v the radius-2t ball volume over Z_p.
    """
    _validate_linear(p, n, k, t)
    v2 = _volume(p, n, 2 * t)
    deg = gaussian_binomial(n - 1, k - 1, p)
    upper = Fraction((v2 - 1) * deg)
    denom = gaussian_binomial(n - 2, k - 2, p) * (v2 - p) + deg * (p - 1)
    lower = Fraction((v2 - 1) * deg * deg, denom)
    return lower, upper


def _validate_linear(p: int, n: int, k: int, t: int) -> None:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n < 1:
        raise DomainError("length must be >= 1")
    if not 1 <= k <= n:
        raise DomainError(f"dimension must lie in [1, {n}]")
    if t < 1:
        raise DomainError("t must be >= 1")


def linear_density_bounds(
    p: int, n: int, k: int, t: int, exact: Fraction | None = None
) -> DensityBounds:
    """Density of k-dimensional codes with minimum distance >= 2t+1 among
    all k-dimensional codes of Z_p^n.

    lower_raw = 1 - (v-1)[n-1,k-1]/[n,k];
    upper_raw = 1 - (v-1)[n-1,k-1]/(theta_bar [n,k]) with
    theta_bar = (p-1) + [n-1,k-1]^{-1} (v-p) [n-2,k-2].
    """
    _validate_linear(p, n, k, t)
    v2 = _volume(p, n, 2 * t)
    deg = gaussian_binomial(n - 1, k - 1, p)
    total = gaussian_binomial(n, k, p)
    theta_bar = (p - 1) + Fraction(v2 - p, deg) * gaussian_binomial(n - 2, k - 2, p)
    raw_lower = 1 - Fraction((v2 - 1) * deg, total)
    raw_upper = 1 - Fraction(v2 - 1, 1) * deg / (theta_bar * total)
    return DensityBounds(
        lower=_clamp01(raw_lower),
        upper=_clamp01(raw_upper),
        raw_lower=raw_lower,
        raw_upper=raw_upper,
        exact=exact,
        parameters=(("p", p), ("n", n), ("k", k), ("t", t)),
    )


def reduced_echelon_generators(
    n: int, k: int, p: int
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All k x n reduced-row-echelon generator matrices over Z_p, one per
    k-dimensional subspace."""
    for pivots in itertools.combinations(range(n), k):
        free_cells = [
            (i, j)
            for i in range(k)
            for j in range(n)
            if j > pivots[i] and j not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free_cells)):
            rows = [[0] * n for _ in range(k)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, j), val in zip(free_cells, values):
                rows[i][j] = val
            yield tuple(tuple(r) for r in rows)


def linear_min_distance(generators: Sequence[Sequence[int]], p: int) -> int:
    """Minimum Lee weight over the nonzero codewords spanned by the rows
    (equals the minimum distance by translation invariance)."""
    k = len(generators)
    n = len(generators[0])
    best = None
    for coeffs in itertools.product(range(p), repeat=k):
        if not any(coeffs):
            continue
        weight = 0
        for j in range(n):
            c = sum(coeffs[i] * generators[i][j] for i in range(k)) % p
            weight += min(c, p - c)
        if best is None or weight < best:
            best = weight
            if best == 0:
                break
    if best is None:
        raise DomainError("the zero code has no minimum distance")
    return best


def linear_density_exact(p: int, n: int, k: int, t: int) -> Fraction:
    """Exact linear density by enumerating every k-dimensional subspace in
    reduced echelon form and scanning its p^k codewords."""
    _validate_linear(p, n, k, t)
    total = gaussian_binomial(n, k, p)
    check_cap("subspaces", total, f"subspace enumeration [{n},{k}]_{p}")
    good = 0
    seen = 0
    for gens in reduced_echelon_generators(n, k, p):
        seen += 1
        if linear_min_distance(gens, p) >= 2 * t + 1:
            good += 1
    if seen != total:
        raise DomainError(
            f"echelon enumeration produced {seen} subspaces, expected {total}"
        )
    return Fraction(good, total)


# ---------------------------------------------------------------------------
# Association consistency and trend sweeps
# ---------------------------------------------------------------------------


def pair_association_spec(space: Space, size: int, t: int) -> AssociationSpec:
    """The edge/code bipartite association underlying the nonlinear
    counting sandwich: left nodes are the unordered word pairs at distance
    <= 2t, right nodes the size-S codes, adjacency is containment, and two
    pairs are classified by how many words they share (magnitude 2)."""
    big_n = space.size
    v2 = ball_volume(space, 2 * t)
    edges = big_n * (v2 - 1) // 2
    beta1 = 2 * v2 - 4
    beta0 = edges - beta1 - 1
    class_sizes = (edges * beta0, edges * beta1, edges)
    co = (
        binom(big_n - 4, size - 4),
        binom(big_n - 3, size - 3),
        binom(big_n - 2, size - 2),
    )
    return AssociationSpec(
        magnitude=2,
        class_sizes=class_sizes,
        co_neighborhoods=co,
        left_size=edges,
        right_size=binom(big_n, size),
    )


@dataclass(frozen=True)
class PlotkinDensityPoint:
    """Upper bound on the density of codes whose size attains the averaging
    bound, evaluated through the large-parameter simplification
    1 - (v-1)/((p-1) p^(n-k) + v - p) at the exact, generally non-integral
    dimension k = n - (8t+4)/(p+1) + 1."""

    p: int
    n: int
    t: int
    dimension: Fraction
    dimension_floor: int
    dimension_gap: Fraction
    raw_value: Fraction | float
    value: Fraction | float  # clamped to [0, 1]


def plotkin_attaining_density_upper(p: int, n: int, t: int) -> PlotkinDensityPoint:
    if not is_prime(p) or p < 3:
        raise DomainError("needs an odd prime p >= 3")
    if n < 1 or t < 1:
        raise DomainError("need n >= 1 and t >= 1")
    v2 = _volume(p, n, 2 * t)
    k = n - Fraction(8 * t + 4, p + 1) + 1
    exponent = n - k  # (8t+3-p)/(p+1)
    if exponent.denominator == 1:
        power: Fraction | float = Fraction(p) ** int(exponent)
    else:
        power = float(p) ** float(exponent)
    raw = 1 - Fraction(v2 - 1) / ((p - 1) * power + v2 - p)
    if isinstance(raw, Fraction):
        clamped: Fraction | float = _clamp01(raw)
    else:
        clamped = min(max(raw, 0.0), 1.0)
    return PlotkinDensityPoint(
        p=p,
        n=n,
        t=t,
        dimension=k,
        dimension_floor=math.floor(k),
        dimension_gap=k - math.floor(k),
        raw_value=raw,
        value=clamped,
    )


@dataclass(frozen=True)
class TrendTable:
    quantity: str
    vary: str
    rows: tuple[dict, ...]
    direction: str  # increasing | decreasing | constant | nonmonotone | single
    strict: bool


_TREND_QUANTITIES = {
    "linear_density_lower": lambda ps: linear_density_bounds(**ps).raw_lower,
    "linear_density_upper": lambda ps: linear_density_bounds(**ps).raw_upper,
    "linear_density_exact": lambda ps: linear_density_exact(**ps),
    "nonlinear_density_lower": lambda ps: nonlinear_density_bounds(
        Space(ps["m"], ps["n"]), ps["S"], ps["t"]
    ).raw_lower,
    "nonlinear_density_upper": lambda ps: nonlinear_density_bounds(
        Space(ps["m"], ps["n"]), ps["S"], ps["t"]
    ).raw_upper,
    "nonlinear_density_exact": lambda ps: nonlinear_density_exact(
        Space(ps["m"], ps["n"]), ps["S"], ps["t"]
    ),
    "plotkin_attaining_upper": lambda ps: plotkin_attaining_density_upper(
        **ps
    ).raw_value,
}


def trend_scan(quantity: str, base: dict, vary: str, values) -> TrendTable:
    """Evaluate `quantity` along a one-parameter sweep and classify the
    direction of the resulting sequence.  No asymptotic claim is made; the
    table simply records the finite trend."""
    if quantity not in _TREND_QUANTITIES:
        raise DomainError(
            f"unknown quantity {quantity!r}; choose from "
            f"{sorted(_TREND_QUANTITIES)}"
        )
    fn = _TREND_QUANTITIES[quantity]
    rows = []
    for value in values:
        params = dict(base)
        params[vary] = value
        rows.append({vary: value, "value": fn(params)})
    seq = [row["value"] for row in rows]
    direction, strict = _classify(seq)
    return TrendTable(
        quantity=quantity,
        vary=vary,
        rows=tuple(rows),
        direction=direction,
        strict=strict,
    )


def _classify(seq: list) -> tuple[str, bool]:
    if len(seq) <= 1:
        return "single", False
    diffs = [_compare(seq[i + 1], seq[i]) for i in range(len(seq) - 1)]
    if all(d == 0 for d in diffs):
        return "constant", False
    if all(d >= 0 for d in diffs):
        return "increasing", all(d > 0 for d in diffs)
    if all(d <= 0 for d in diffs):
        return "decreasing", all(d < 0 for d in diffs)
    return "nonmonotone", False


def _compare(a, b) -> int:
    # exact when both are rational; mixed comparisons fall back to floats,
    # which is safe here because the irrational values involve prime powers
    # with non-integral exponents and sit far from their rational peers
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return (a > b) - (a < b)
    fa, fb = float(a), float(b)
    return (fa > fb) - (fa < fb)
