"""Ground-truth arithmetic of the Lee metric on Z_m^n.

Residues are always the canonical representatives 0..m-1; subtraction is
reduced mod m before weighing.  All counts are exact integers and all
averages exact rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

from .config import check_cap
from .errors import DomainError

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def binom(a: int, b: int) -> int:
    """Binomial coefficient with C(a,b) = 0 whenever b < 0, b > a or a < 0.

    This degenerate convention is used everywhere in the package so that
    signed-sum formulas can be evaluated verbatim without case analysis.
    """
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class Space:
    """The ambient space Z_m^n: modulus m >= 2, length n >= 1."""

    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 2:
            raise DomainError(f"modulus must be >= 2, got {self.m}")
        if self.n < 1:
            raise DomainError(f"length must be >= 1, got {self.n}")

    @property
    def half(self) -> int:
        """Largest Lee weight of a single coordinate, floor(m/2)."""
        return self.m // 2

    @property
    def size(self) -> int:
        return self.m**self.n

    @property
    def max_weight(self) -> int:
        """Largest Lee weight of any word, n * floor(m/2)."""
        return self.n * (self.m // 2)


def lee_weight(x: int, m: int) -> int:
    """Lee weight min(x, m-x) of a residue x in Z_m."""
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    if not 0 <= x < m:
        raise DomainError(f"residue {x} out of range [0, {m})")
    return min(x, m - x)


@dataclass(frozen=True)
class Word:
    """A vector in Z_m^n."""

    space: Space
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.space.n:
            raise DomainError(
                f"expected {self.space.n} coordinates, got {len(self.coords)}"
            )
        for c in self.coords:
            if not 0 <= c < self.space.m:
                raise DomainError(f"coordinate {c} out of range [0, {self.space.m})")

    @classmethod
    def of(cls, space: Space, coords: Iterable[int]) -> "Word":
        return cls(space, tuple(coords))

    @classmethod
    def zero(cls, space: Space) -> "Word":
        return cls(space, (0,) * space.n)

    @classmethod
    def from_index(cls, space: Space, index: int) -> "Word":
        """Decode a base-m integer index, most significant coordinate first."""
        if not 0 <= index < space.size:
            raise DomainError(f"index {index} out of range [0, {space.size})")
        coords = []
        for _ in range(space.n):
            index, digit = divmod(index, space.m)
            coords.append(digit)
        return cls(space, tuple(reversed(coords)))

    @classmethod
    def from_string(cls, space: Space, digits: str) -> "Word":
        """Parse a base-m digit string, most significant coordinate first."""
        if space.m > len(_DIGITS):
            raise DomainError(f"digit strings support modulus <= {len(_DIGITS)}")
        try:
            coords = tuple(_DIGITS.index(ch) for ch in digits.lower())
        except ValueError as exc:
            raise DomainError(f"invalid digit in {digits!r}") from exc
        return cls(space, coords)

    def to_index(self) -> int:
        index = 0
        for c in self.coords:
            index = index * self.space.m + c
        return index

    def to_string(self) -> str:
        if self.space.m > len(_DIGITS):
            raise DomainError(f"digit strings support modulus <= {len(_DIGITS)}")
        return "".join(_DIGITS[c] for c in self.coords)

    def weight(self) -> int:
        m = self.space.m
        return sum(min(c, m - c) for c in self.coords)

    def sub(self, other: "Word") -> "Word":
        _require_same_space(self, other)
        m = self.space.m
        return Word(self.space, tuple((a - b) % m for a, b in zip(self.coords, other.coords)))

    def add(self, other: "Word") -> "Word":
        _require_same_space(self, other)
        m = self.space.m
        return Word(self.space, tuple((a + b) % m for a, b in zip(self.coords, other.coords)))


def _require_same_space(x: Word, y: Word) -> None:
    if x.space != y.space:
        raise DomainError(f"words live in different spaces: {x.space} vs {y.space}")


def lee_distance(x: Word, y: Word) -> int:
    """Lee distance, the Lee weight of the coordinate-wise difference."""
    _require_same_space(x, y)
    m = x.space.m
    total = 0
    for a, b in zip(x.coords, y.coords):
        d = (a - b) % m
        total += min(d, m - d)
    return total


def average_lee_weight(m: int) -> Fraction:
    """Mean Lee weight of a uniformly random residue in Z_m, exactly.

    Equals m/4 for even m and (m^2 - 1)/(4m) for odd m.
    """
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    return Fraction(sum(min(x, m - x) for x in range(m)), m)


@dataclass(frozen=True)
class Composition:
    """Per-weight coordinate histogram of a word.

    counts[i] is the number of coordinates of Lee weight i, for
    i = 0..floor(m/2); the counts sum to the word length.
    """

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts or any(c < 0 for c in self.counts):
            raise DomainError("composition counts must be nonnegative and nonempty")

    def length(self) -> int:
        return sum(self.counts)

    def weight(self) -> int:
        return sum(i * c for i, c in enumerate(self.counts))


def lee_composition(z: Word) -> Composition:
    """Histogram of coordinate Lee weights of z."""
    half = z.space.half
    m = z.space.m
    counts = [0] * (half + 1)
    for c in z.coords:
        counts[min(c, m - c)] += 1
    return Composition(tuple(counts))


def weight_tuple(z: Word) -> tuple[int, ...]:
    """Per-coordinate Lee weights of z, in coordinate order."""
    m = z.space.m
    return tuple(min(c, m - c) for c in z.coords)


@lru_cache(maxsize=None)
def _bounded_composition_counts(half: int, n: int) -> tuple[int, ...]:
    # ways[j] = number of weak compositions of j into n ordered parts, each <= half
    ways = [1]
    for _ in range(n):
        new = [0] * (len(ways) + half)
        for total, count in enumerate(ways):
            if count:
                for w in range(half + 1):
                    new[total + w] += count
        ways = new
    return tuple(ways)


def count_weight_compositions(j: int, space: Space, method: str = "oracle") -> int:
    """Number of weak compositions of j into n parts, each part <= floor(m/2).

    ``oracle`` counts by dynamic programming and is the ground truth.
    ``signed_sum`` evaluates the textbook-style alternating sum
    sum_{r + s*floor(m/2) = j, r,s >= 0} (-1)^s C(n,s) C(n+r-1, r) verbatim;
    it is retained for reconciliation only and is known to disagree with the
    oracle (see the verify suite), so never use it as a count.
    """
    if not 0 <= j <= space.max_weight:
        raise DomainError(f"weight {j} out of range [0, {space.max_weight}]")
    if method == "oracle":
        return _bounded_composition_counts(space.half, space.n)[j]
    if method == "signed_sum":
        half = space.half
        n = space.n
        total = 0
        for s in range(j // half + 1):
            r = j - s * half
            total += (-1) ** s * binom(n, s) * binom(n + r - 1, r)
        return total
    raise DomainError(f"unknown method {method!r}")


def count_all_compositions(space: Space) -> int:
    """Sum of the oracle composition counts over all weights 0..n*floor(m/2).

    Equals (floor(m/2)+1)^n, the number of distinct per-coordinate weight
    tuples; note this is larger than the number of distinct weight
    histograms whenever n >= 2 (see weight_tuple / lee_composition).
    """
    return sum(_bounded_composition_counts(space.half, space.n))


def iter_coords(space: Space) -> Iterator[tuple[int, ...]]:
    """All coordinate tuples of the space in lexicographic order (no cap)."""
    return itertools.product(range(space.m), repeat=space.n)


def iter_words(space: Space) -> Iterator[Word]:
    """All m^n words exactly once, lexicographic in the coordinate tuples."""
    check_cap("word_enum", space.size, f"enumerating {space}")
    for coords in itertools.product(range(space.m), repeat=space.n):
        yield Word(space, coords)
