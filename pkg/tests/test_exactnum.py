from fractions import Fraction
import math
import random

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from cubicshapes.exactnum import (DyadicInterval, enclose_rational,
                                  integer_nth_root_floor, interval_log,
                                  interval_sqrt, round_dyadic, sqrt3)
from conftest import frac_to_mpf

ORACLE_DPS = 1000


@pytest.fixture(autouse=True)
def oracle_precision():
    with mpmath.workdps(ORACLE_DPS):
        yield


def mp_contains(iv, value):
    return frac_to_mpf(iv.lo) <= value <= frac_to_mpf(iv.hi)


# -- enclose_rational -------------------------------------------------------

def test_enclose_third_small_bits():
    iv = enclose_rational(Fraction(1, 3), 4)
    assert Fraction(1, 3) in iv
    assert iv.width <= Fraction(1, 8)


def test_enclose_dyadic_is_exact():
    for bits in (1, 8, 200):
        iv = enclose_rational(5, bits)
        assert iv.lo == iv.hi == 5


def test_enclose_one_24th():
    iv = enclose_rational(Fraction(1, 24), 53)
    assert Fraction(1, 24) in iv
    assert iv.width <= Fraction(1, 2 ** 52)
    assert abs(float(iv.mid) - 0.0416666666666666) < 1e-15


def test_enclose_rejects_nonpositive_bits():
    with pytest.raises(ValueError):
        enclose_rational(Fraction(1, 3), 0)


def test_round_dyadic_direction():
    x = Fraction(1, 3)
    assert round_dyadic(x, 10, up=False) <= x <= round_dyadic(x, 10, up=True)


# -- arithmetic ------------------------------------------------------------

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=10 ** 6)


@settings(max_examples=300, deadline=None)
@given(rationals, rationals, rationals, rationals)
def test_arithmetic_contains_exact_results(a, b, c, d):
    x = DyadicInterval(min(a, b), max(a, b), 40)
    y = DyadicInterval(min(c, d), max(c, d), 40)
    for u in (a, b):
        for v in (c, d):
            assert u + v in x + y
            assert u - v in x - y
            assert u * v in x * y
            if not y.contains_zero():
                assert u / v in x / y
    assert a * a in x.square()
    assert abs(a) in abs(x)


def test_division_by_zero_interval():
    with pytest.raises(ZeroDivisionError):
        DyadicInterval(1) / DyadicInterval(-1, 1)


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        DyadicInterval(2, 1)


def test_immutable():
    iv = DyadicInterval(1, 2)
    with pytest.raises(AttributeError):
        iv.lo = 0


def test_compare():
    iv = DyadicInterval(1, 2)
    assert iv.compare(0) == 1
    assert iv.compare(3) == -1
    assert iv.compare(Fraction(3, 2)) is None


# -- log --------------------------------------------------------------------

def test_log_one():
    iv = interval_log(DyadicInterval(1, 1, 128))
    assert 0 in iv
    assert iv.width <= Fraction(1, 2 ** 126)


def test_log_two_against_series_oracle():
    iv = interval_log(DyadicInterval(2, 2, 256))
    assert mp_contains(iv, mpmath.log(2))
    assert iv.width < Fraction(1, 2 ** 250)


def test_log_of_e_enclosure_contains_one():
    # e = sum 1/n!, tail after N terms bounded by 2/(N+1)!
    N = 60
    s = sum(Fraction(1, math.factorial(n)) for n in range(N + 1))
    tail = Fraction(2, math.factorial(N + 1))
    e_iv = DyadicInterval(s, s + tail, 160)
    assert 1 in interval_log(e_iv)


def test_log_random_containment():
    rng = random.Random(7)
    for _ in range(400):
        prec = rng.choice([32, 64, 128, 512])
        num = rng.randrange(1, 10 ** rng.randrange(1, 60))
        den = rng.randrange(1, 10 ** rng.randrange(1, 60))
        x = Fraction(num, den)
        iv = interval_log(DyadicInterval(x, x, prec))
        assert mp_contains(iv, mpmath.log(frac_to_mpf(x)))
        scale = max(1, abs(float(iv.mid)))
        assert float(iv.width) <= scale * 2.0 ** (-prec + 4)


def test_log_is_monotone_enclosure():
    iv = interval_log(DyadicInterval(Fraction(1, 2), 3, 64))
    assert mp_contains(iv, mpmath.log(0.5))
    assert mp_contains(iv, mpmath.log(3))


def test_log_rejects_nonpositive():
    with pytest.raises(ValueError):
        interval_log(DyadicInterval(0, 1))
    with pytest.raises(ValueError):
        interval_log(DyadicInterval(-2, -1))


# -- sqrt -------------------------------------------------------------------

def test_sqrt_examples():
    assert 2 in interval_sqrt(DyadicInterval(4, 4))
    r = interval_sqrt(DyadicInterval(3, 3, 60))
    assert mp_contains(r, mpmath.sqrt(3))
    assert float(r.width) < 2.0 ** -55
    z = interval_sqrt(DyadicInterval(0, 0))
    assert z.lo == z.hi == 0


def test_sqrt3_cached_and_tight():
    r = sqrt3(300)
    assert r.lo ** 2 <= 3 <= r.hi ** 2
    assert r.width < Fraction(1, 2 ** 295)


def test_sqrt_random():
    rng = random.Random(3)
    for _ in range(300):
        x = Fraction(rng.randrange(1, 10 ** 40), rng.randrange(1, 10 ** 30))
        r = interval_sqrt(DyadicInterval(x, x, 100))
        assert r.lo ** 2 <= x <= r.hi ** 2


def test_sqrt_negative_rejected():
    with pytest.raises(ValueError):
        interval_sqrt(DyadicInterval(-1, 1))


# -- integer roots --------------------------------------------------------

@pytest.mark.parametrize("n,k,r", [(10 ** 6, 6, 10), (26, 3, 2), (27, 3, 3), (0, 5, 0), (1, 9, 1)])
def test_nth_root_examples(n, k, r):
    assert integer_nth_root_floor(n, k) == r


def test_nth_root_bracket():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randrange(0, 10 ** rng.randrange(1, 120))
        k = rng.randrange(1, 12)
        r = integer_nth_root_floor(n, k)
        assert r ** k <= n < (r + 1) ** k
