import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from leelab import (
    CapacityError,
    Composition,
    DomainError,
    Space,
    Word,
    average_lee_weight,
    binom,
    count_all_compositions,
    count_weight_compositions,
    iter_words,
    lee_composition,
    lee_distance,
    lee_weight,
)
from leelab.config import reset_caps, set_cap
from leelab.core import weight_tuple


def W(m, n, *coords):
    return Word(Space(m, n), tuple(coords))


def test_lee_weight_examples():
    assert lee_weight(0, 7) == 0
    assert lee_weight(3, 5) == 2
    assert lee_weight(6, 7) == 1


def test_lee_weight_domain():
    with pytest.raises(DomainError):
        lee_weight(7, 7)
    with pytest.raises(DomainError):
        lee_weight(-1, 5)
    with pytest.raises(DomainError):
        lee_weight(0, 1)


@given(st.integers(min_value=2, max_value=200), st.data())
def test_lee_weight_symmetry(m, data):
    x = data.draw(st.integers(min_value=0, max_value=m - 1))
    assert lee_weight(x, m) == lee_weight((m - x) % m, m)
    assert 0 <= lee_weight(x, m) <= m // 2


def test_lee_distance_examples():
    assert lee_distance(W(4, 2, 0, 0), W(4, 2, 0, 0)) == 0
    assert lee_distance(W(4, 2, 0, 0), W(4, 2, 1, 2)) == 3
    assert lee_distance(W(4, 2, 1, 1), W(4, 2, 3, 3)) == 4


def test_lee_distance_space_mismatch():
    with pytest.raises(DomainError):
        lee_distance(W(4, 2, 0, 0), W(5, 2, 0, 0))


def test_distance_symmetric_and_zero_iff_equal():
    space = Space(5, 2)
    words = [Word(space, c) for c in itertools.product(range(5), repeat=2)]
    for x in words:
        for y in words:
            d = lee_distance(x, y)
            assert d == lee_distance(y, x)
            assert (d == 0) == (x == y)


def test_triangle_inequality_via_difference_pairs():
    # d(x,z) <= d(x,y) + d(y,z) for all word triples is equivalent, via
    # translation invariance, to subadditivity of the weight on pairs
    for m in range(2, 7):
        for n in range(1, 4):
            space = Space(m, n)
            zero = Word.zero(space)
            words = [Word(space, c) for c in itertools.product(range(m), repeat=n)]
            weights = {w: lee_distance(w, zero) for w in words}
            for u in words:
                for v in words:
                    assert weights[u.add(v)] <= weights[u] + weights[v]


def test_translation_invariance_exhaustive():
    for m in range(2, 6):
        for n in range(1, 4):
            space = Space(m, n)
            words = [Word(space, c) for c in itertools.product(range(m), repeat=n)]
            dist = [[lee_distance(x, y) for y in words] for x in words]
            index = {w: i for i, w in enumerate(words)}
            for t in words:
                perm = [index[w.add(t)] for w in words]
                for i in range(len(words)):
                    row = dist[i]
                    prow = dist[perm[i]]
                    for j in range(i, len(words)):
                        assert prow[perm[j]] == row[j]


def test_hamming_coincidence_small_moduli():
    for m in (2, 3):
        space = Space(m, 3)
        words = [Word(space, c) for c in itertools.product(range(m), repeat=3)]
        for x in words:
            for y in words:
                hamming = sum(a != b for a, b in zip(x.coords, y.coords))
                assert lee_distance(x, y) == hamming


def test_average_lee_weight_examples():
    assert average_lee_weight(2) == Fraction(1, 2)
    assert average_lee_weight(4) == 1
    assert average_lee_weight(5) == Fraction(6, 5)


def test_average_lee_weight_closed_forms():
    for m in range(2, 51):
        expected = Fraction(m, 4) if m % 2 == 0 else Fraction(m * m - 1, 4 * m)
        assert average_lee_weight(m) == expected


def test_lee_composition_examples():
    assert lee_composition(W(5, 3, 0, 0, 0)).counts == (3, 0, 0)
    assert lee_composition(W(5, 4, 0, 1, 4, 2)).counts == (1, 2, 1)
    assert lee_composition(W(6, 2, 3, 3)).counts == (0, 0, 0, 2)


def test_composition_invariants_exhaustive():
    for m in range(2, 7):
        for n in range(1, 4):
            space = Space(m, n)
            for word in iter_words(space):
                comp = lee_composition(word)
                assert comp.length() == n
                assert comp.weight() == word.weight()


def test_composition_validation():
    with pytest.raises(DomainError):
        Composition(())
    with pytest.raises(DomainError):
        Composition((1, -1))


def test_count_weight_compositions_examples():
    assert count_weight_compositions(0, Space(7, 3)) == 1
    assert count_weight_compositions(2, Space(4, 2)) == 3  # (0,2),(1,1),(2,0)
    assert count_weight_compositions(4, Space(4, 2)) == 1  # only (2,2)
    with pytest.raises(DomainError):
        count_weight_compositions(5, Space(4, 2))
    with pytest.raises(DomainError):
        count_weight_compositions(-1, Space(4, 2))


def test_count_weight_compositions_against_enumeration():
    for m in range(2, 6):
        for n in range(1, 5):
            space = Space(m, n)
            half = space.half
            seen = [0] * (space.max_weight + 1)
            for parts in itertools.product(range(half + 1), repeat=n):
                seen[sum(parts)] += 1
            for j in range(space.max_weight + 1):
                assert count_weight_compositions(j, space) == seen[j]


def test_signed_sum_method_is_reported_not_trusted():
    # the printed alternating sum disagrees with the oracle; both remain
    # callable so the verify suite can reconcile them
    space = Space(4, 2)
    assert count_weight_compositions(2, space, method="signed_sum") != 3
    with pytest.raises(DomainError):
        count_weight_compositions(1, space, method="nonsense")


def test_count_all_compositions_examples():
    assert count_all_compositions(Space(2, 1)) == 2
    assert count_all_compositions(Space(4, 2)) == 9
    assert count_all_compositions(Space(3, 3)) == 8


def test_count_all_compositions_counts_weight_tuples():
    for m in range(2, 6):
        for n in range(1, 5):
            space = Space(m, n)
            tuples = {weight_tuple(w) for w in iter_words(space)}
            histograms = {lee_composition(w).counts for w in iter_words(space)}
            assert count_all_compositions(space) == len(tuples)
            assert len(histograms) == binom(n + space.half, space.half)


def test_iter_words_order_and_examples():
    assert [w.coords for w in iter_words(Space(2, 1))] == [(0,), (1,)]
    assert [w.coords for w in iter_words(Space(3, 1))] == [(0,), (1,), (2,)]
    words = list(iter_words(Space(2, 2)))
    assert len(words) == 4
    assert words[0].coords == (0, 0)
    assert words[-1].coords == (1, 1)


def test_iter_words_cap():
    set_cap("word_enum", 8)
    try:
        with pytest.raises(CapacityError):
            list(iter_words(Space(3, 2)))
        assert len(list(iter_words(Space(2, 3)))) == 8
    finally:
        reset_caps()


def test_space_validation():
    with pytest.raises(DomainError):
        Space(1, 3)
    with pytest.raises(DomainError):
        Space(4, 0)
    space = Space(7, 3)
    assert space.half == 3 and space.size == 343 and space.max_weight == 9


def test_word_validation_and_codecs():
    space = Space(4, 2)
    with pytest.raises(DomainError):
        Word(space, (0, 4))
    with pytest.raises(DomainError):
        Word(space, (0,))
    w = Word.from_string(space, "31")
    assert w.coords == (3, 1)
    assert w.to_string() == "31"
    assert Word.from_index(space, w.to_index()) == w


@given(st.integers(min_value=2, max_value=12), st.integers(min_value=1, max_value=5), st.data())
def test_word_index_roundtrip(m, n, data):
    space = Space(m, n)
    index = data.draw(st.integers(min_value=0, max_value=space.size - 1))
    word = Word.from_index(space, index)
    assert word.to_index() == index
    assert Word.from_string(space, word.to_string()) == word


@given(st.integers(min_value=-5, max_value=40), st.integers(min_value=-5, max_value=40))
def test_binom_convention(a, b):
    value = binom(a, b)
    if b < 0 or a < 0 or b > a:
        assert value == 0
    else:
        import math

        assert value == math.comb(a, b)
