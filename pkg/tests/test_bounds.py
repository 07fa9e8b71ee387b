import itertools
from fractions import Fraction

import pytest

from leelab import (
    CapacityError,
    DomainError,
    Space,
    ball_volume,
    elias_bound,
    elias_bound_preset,
    gv_radius,
    hamming_bound,
    max_code_size_exact,
    plotkin_like_bound,
)
from leelab.bounds import is_prime
from leelab.config import reset_caps, set_cap


def brute_max_code(m, n, d):
    size = m**n
    words = list(itertools.product(range(m), repeat=n))

    def dist(a, b):
        return sum(min((x - y) % m, (y - x) % m) for x, y in zip(a, b))

    adjacency = [0] * size
    for i in range(size):
        for j in range(size):
            if i != j and dist(words[i], words[j]) < d:
                adjacency[i] |= 1 << j
    best = 0
    for mask in range(1 << size):
        mm = mask
        ok = True
        while mm:
            v = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            if adjacency[v] & mask:
                ok = False
                break
        if ok:
            best = max(best, mask.bit_count())
    return best


def test_hamming_bound_examples():
    assert hamming_bound(Space(4, 2), 0) == 16
    assert hamming_bound(Space(4, 2), 1) == Fraction(16, 5)
    assert hamming_bound(Space(3, 2), 1) == Fraction(9, 5)
    with pytest.raises(DomainError):
        hamming_bound(Space(4, 2), 5)


def test_plotkin_examples():
    assert plotkin_like_bound(3, 1, 4, 1).exponent == 2
    assert plotkin_like_bound(5, 1, 6, 2).exponent == Fraction(11, 3)
    assert plotkin_like_bound(3, 2, 3, 1).exponent == Fraction(28, 5)


def test_plotkin_domain():
    with pytest.raises(DomainError):
        plotkin_like_bound(2, 1, 4, 1)
    with pytest.raises(DomainError):
        plotkin_like_bound(9, 1, 4, 1)  # not prime
    with pytest.raises(DomainError):
        plotkin_like_bound(3, 0, 4, 1)


def test_is_prime():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23}
    for k in range(2, 25):
        assert is_prime(k) == (k in primes)
    assert not is_prime(1) and not is_prime(0)


def test_elias_examples():
    space = Space(4, 2)
    assert elias_bound(space, 3, 1).value == Fraction(32, 5)
    assert elias_bound(space, 3, 2).value == Fraction(48, 11)
    report = elias_bound(space, 1, 1)
    assert not report.hypotheses_ok and report.value is None
    # r = 0 degenerates to the space size
    assert elias_bound(space, 3, 0).value == 16


def test_elias_preset():
    desk = elias_bound_preset(Space(4, 2), 1)
    assert not desk.hypotheses_ok  # theta*n too small for r = t + 7
    large = elias_bound_preset(Space(4, 2500), 500)
    assert large.hypotheses_ok and large.value > 0


def test_gv_examples():
    cert = gv_radius(Space(3, 2), Fraction(1, 2))
    assert cert.t == 1 and cert.volume == 9
    cert = gv_radius(Space(5, 2), Fraction(1, 2))
    assert ball_volume(Space(5, 2), 2 * cert.t) == cert.volume
    assert cert.volume >= 5  # 5^(2*1/2)
    if cert.t > 0:
        assert ball_volume(Space(5, 2), 2 * (cert.t - 1)) < 5
    cert = gv_radius(Space(3, 2), Fraction(0))
    assert cert.volume >= 9 and 2 * cert.t >= 2
    with pytest.raises(DomainError):
        gv_radius(Space(3, 2), Fraction(1))


def test_max_code_size_examples():
    assert max_code_size_exact(Space(4, 2), 3) == 2
    assert max_code_size_exact(Space(4, 2), 1) == 16
    assert max_code_size_exact(Space(3, 2), 3) == 1


def test_max_code_size_against_brute_force():
    for m, n in ((2, 3), (3, 2), (4, 2), (2, 4)):
        space = Space(m, n)
        for d in range(1, space.max_weight + 2):
            assert max_code_size_exact(space, d) == brute_max_code(m, n, d)


def test_max_code_size_known_values():
    assert max_code_size_exact(Space(5, 2), 3) == 5  # perfect single-error code
    assert max_code_size_exact(Space(3, 3), 3) == 3
    assert max_code_size_exact(Space(5, 3), 2) == 50
    assert max_code_size_exact(Space(4, 3), 2) == 32  # parity class


def test_max_code_size_cap():
    set_cap("mis_nodes", 100)
    try:
        with pytest.raises(CapacityError):
            max_code_size_exact(Space(5, 4), 3)
    finally:
        reset_caps()


def test_bound_soundness_small_grid():
    for m in (3, 4, 5):
        for n in (2, 3):
            space = Space(m, n)
            theta_n = Fraction(sum(min(x, m - x) for x in range(m)), m) * n
            for t in range(0, space.max_weight // 2 + 1):
                d = 2 * t + 1
                exact = max_code_size_exact(space, d)
                assert exact <= hamming_bound(space, t)
                for r in range(0, int(theta_n) + 1):
                    report = elias_bound(space, d, r)
                    if report.hypotheses_ok:
                        assert exact <= report.value
