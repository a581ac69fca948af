from fractions import Fraction
import random

import mpmath
import pytest

from cubicshapes.errors import PrecisionError
from cubicshapes.exactnum import DyadicInterval
from cubicshapes.modular import (IDENTITY, ExactPoint, UpperHalfPoint,
                                 hyperbolic_distance, in_fundamental_domain,
                                 mat_mul, mobius, quotient_distance,
                                 reduce_exact, reduce_sl2)
from conftest import frac_to_mpf

HALF = Fraction(1, 2)


def point(x, y, prec=128):
    return UpperHalfPoint.from_rationals(Fraction(x), Fraction(y), prec)


def det(g):
    a, b, c, d = g
    return a * d - b * c


def exact_in_domain(z):
    r2 = z.abs2()
    if not -HALF <= z.x < HALF or r2 < 1:
        return False
    return r2 > 1 or z.x >= 0 or z.x == -HALF


def test_already_reduced():
    red = reduce_sl2(point(Fraction(1, 4), 2))
    assert red.g == IDENTITY
    assert red.tau.x.contains(Fraction(1, 4)) and red.tau.y.contains(2)


def test_translation_convention():
    red = reduce_sl2(point(Fraction(5, 2), 2))
    assert red.tau.x.contains(-HALF)
    assert red.g == (1, -3, 0, 1)


def test_exact_limit_example():
    tau = ExactPoint(Fraction(12, 43), Fraction(9, 43))
    red = reduce_exact(tau)
    assert red.tau == ExactPoint(Fraction(-1, 3), 1)
    assert red.g == (1, -1, 1, 0)
    assert tau.mobius(red.g) == red.tau


def test_interval_reduction_of_exact_point():
    tau = ExactPoint(Fraction(12, 43), Fraction(9, 43))
    red = reduce_sl2(tau.to_interval(200))
    assert red.tau.contains(ExactPoint(Fraction(-1, 3), 1))


def test_random_interval_points():
    rng = random.Random(2024)
    for _ in range(1000):
        x = Fraction(rng.randrange(-10 ** 6, 10 ** 6), rng.randrange(1, 10 ** 4))
        y = Fraction(rng.randrange(1, 10 ** 6), 10 ** rng.randrange(0, 8))
        tau = point(x, y, 200)
        red = reduce_sl2(tau)
        assert det(red.g) == 1
        assert in_fundamental_domain(red.tau) is True
        # recompute the image directly from the input and compare enclosures
        assert mobius(red.g, tau).overlaps(red.tau)


def test_random_exact_points():
    rng = random.Random(77)
    for _ in range(1000):
        x = Fraction(rng.randrange(-10 ** 4, 10 ** 4), rng.randrange(1, 500))
        s = Fraction(rng.randrange(1, 10 ** 4), rng.randrange(1, 10 ** 5))
        tau = ExactPoint(x, s)
        red = reduce_exact(tau)
        assert det(red.g) == 1
        assert exact_in_domain(red.tau)
        assert tau.mobius(red.g) == red.tau


def test_boundary_cases_exact():
    rho = ExactPoint(HALF, HALF)
    assert reduce_exact(rho).tau == ExactPoint(-HALF, HALF)
    i_like = ExactPoint(0, Fraction(1, 3))  # i/sqrt3 -> i*sqrt3
    assert reduce_exact(i_like).tau == ExactPoint(0, 1)
    # left half of the arc maps to the right half
    z = ExactPoint(Fraction(-1, 4), Fraction(1, 4))  # |z|^2 = 1/16 + 3/16 < 1
    assert exact_in_domain(reduce_exact(z).tau)


def test_straddle_raises():
    tau = UpperHalfPoint(DyadicInterval(Fraction(-1, 10), Fraction(1, 10)), DyadicInterval(Fraction(99, 100), Fraction(101, 100)))
    with pytest.raises(PrecisionError):
        reduce_sl2(tau)


def test_nonpositive_imaginary_rejected():
    with pytest.raises(PrecisionError):
        point(0, 0)
    with pytest.raises(ValueError):
        ExactPoint(0, 0)


def test_mat_mul_associates():
    g, h, k = (1, 2, 3, 7), (0, -1, 1, 0), (1, 5, 0, 1)
    assert mat_mul(mat_mul(g, h), k) == mat_mul(g, mat_mul(h, k))


def test_hyperbolic_distance_vs_mpmath():
    rng = random.Random(5)
    for _ in range(200):
        z = (Fraction(rng.randrange(-1000, 1000), 97), Fraction(rng.randrange(1, 1000), 89))
        w = (Fraction(rng.randrange(-1000, 1000), 83), Fraction(rng.randrange(1, 1000), 79))
        d = hyperbolic_distance(point(*z), point(*w), 128)
        with mpmath.workdps(60):
            zc = mpmath.mpc(frac_to_mpf(z[0]), frac_to_mpf(z[1]))
            wc = mpmath.mpc(frac_to_mpf(w[0]), frac_to_mpf(w[1]))
            want = mpmath.acosh(1 + abs(zc - wc) ** 2 / (2 * zc.imag * wc.imag))
            assert frac_to_mpf(d.lo) - mpmath.mpf(2) ** -100 <= want <= frac_to_mpf(d.hi) + mpmath.mpf(2) ** -100


def test_distance_to_self_is_zero():
    d = hyperbolic_distance(point(Fraction(1, 3), 2), point(Fraction(1, 3), 2))
    assert d.contains(0)


def test_quotient_distance_sees_identifications():
    # -1/2 + i and 1/2 + i are the same point of the quotient
    d = quotient_distance(point(-HALF, 1), point(HALF, 1))
    assert d.lo <= Fraction(1, 10 ** 20)
    rho = ExactPoint(HALF, HALF)
    d = quotient_distance(ExactPoint(-HALF, HALF).to_interval(), rho)
    assert d.lo <= Fraction(1, 10 ** 20)


def test_quotient_distance_bounded_by_plain_distance():
    rng = random.Random(8)
    for _ in range(50):
        z = reduce_sl2(point(Fraction(rng.randrange(-50, 50), 101), Fraction(rng.randrange(90, 400), 100))).tau
        w = reduce_sl2(point(Fraction(rng.randrange(-50, 50), 101), Fraction(rng.randrange(90, 400), 100))).tau
        assert quotient_distance(z, w).lo <= hyperbolic_distance(z, w).hi
