"""Monic integer cubics: exact evaluation, discriminant and real-root isolation.

Roots are isolated with the sign-table method: the critical points of
``f`` split the line into three monotone pieces, and exact sign
evaluation at rational points certifies one root per piece.  All
bracketing endpoints are dyadic so that evaluation stays cheap even
for coefficients of several hundred bits.
"""

from dataclasses import dataclass
from fractions import Fraction
import math

from .errors import NotTotallyReal

__all__ = [
    "MonicCubic",
    "RootEnclosures",
    "eval_at_rational",
    "discriminant",
    "isolate_real_roots",
    "refine_root",
    "bisect_once",
    "rational_root_test",
]


@dataclass(frozen=True)
class MonicCubic:
    """The polynomial ``X^3 + p X^2 + q X + r`` with integer coefficients."""

    p: int
    q: int
    r: int

    def __call__(self, x):
        x = Fraction(x)
        return ((x + self.p) * x + self.q) * x + self.r

    def derivative(self, x):
        x = Fraction(x)
        return (3 * x + 2 * self.p) * x + self.q

    def sign_at(self, x):
        """Sign of ``f(x)`` for rational ``x``, using integer arithmetic only."""
        x = Fraction(x)
        m, d = x.numerator, x.denominator
        v = ((m + self.p * d) * m + self.q * d * d) * m + self.r * d * d * d
        return (v > 0) - (v < 0)

    @property
    def discriminant(self):
        return discriminant(self)

    def coefficients(self):
        return (1, self.p, self.q, self.r)

    def __str__(self):
        parts = ["X^3"]
        for c, mono in ((self.p, "X^2"), (self.q, "X"), (self.r, "")):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = mono if (mag == 1 and mono) else f"{mag}{mono}"
            parts.append(f"{sign} {body}")
        return " ".join(parts)


def eval_at_rational(f, x):
    """Exact value ``f(x)``."""
    return f(x)


def discriminant(f):
    p, q, r = f.p, f.q, f.r
    return 18 * p * q * r - 4 * p ** 3 * r + p * p * q * q - 4 * q ** 3 - 27 * r * r


@dataclass(frozen=True)
class RootEnclosures:
    """Three disjoint open intervals ``(lo, hi)``, ascending, one root each.

    Every interval satisfies ``sign f(lo) == -sign f(hi) != 0``.
    """

    intervals: tuple

    def __getitem__(self, i):
        return self.intervals[i]

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    def widths(self):
        return tuple(hi - lo for lo, hi in self.intervals)

    def replace(self, i, interval):
        items = list(self.intervals)
        items[i] = interval
        return RootEnclosures(tuple(items))


def _dyadic_floor(x, bits):
    return Fraction(math.floor(x * (1 << bits)), 1 << bits)


def _critical_points(f, bits):
    """Dyadic approximations of the two critical points of f (ascending)."""
    # f' = 3X^2 + 2pX + q has roots (-p -+ sqrt(p^2 - 3q)) / 3
    disc = f.p * f.p - 3 * f.q
    if disc <= 0:
        return None
    root = Fraction(math.isqrt(disc << (2 * bits)), 1 << bits)
    return (_dyadic_floor((-f.p - root) / 3, bits),
            _dyadic_floor((-f.p + root) / 3, bits))


def _root_bound(f):
    return 1 + max(abs(f.p), abs(f.q), abs(f.r))


def isolate_real_roots(f, rel_bits=10):
    """Isolate the three real roots of ``f``.

    The intervals are refined until each excludes zero (when ``f(0) != 0``)
    and has width at most ``2**-rel_bits`` times the larger of 1 and the
    size of its endpoints.  Raises ``NotTotallyReal`` unless the
    discriminant is positive.
    """
    disc = discriminant(f)
    if disc <= 0:
        raise NotTotallyReal(f"{f} has discriminant {disc} <= 0")
    bound = _root_bound(f)
    bits = 8
    while True:
        c1, c2 = _critical_points(f, bits)
        if f.sign_at(c1) > 0 and f.sign_at(c2) < 0:
            break
        bits *= 2
    raw = [(Fraction(-bound), c1), (c1, c2), (c2, Fraction(bound))]
    out = []
    for lo, hi in raw:
        while True:
            w = hi - lo
            scale = max(1, abs(lo), abs(hi))
            straddles = f.r != 0 and lo < 0 < hi
            if not straddles and w <= scale / (1 << rel_bits):
                break
            lo, hi = bisect_once(f, (lo, hi))
        out.append((lo, hi))
    return RootEnclosures(tuple(out))


def bisect_once(f, enclosure):
    """Halve a sign-change enclosure, keeping the half that holds the root."""
    lo, hi = enclosure
    mid = (lo + hi) / 2
    s_mid = f.sign_at(mid)
    if s_mid == 0:
        # exact rational root: shrink symmetrically around it
        h = (hi - lo) / 8
        return (mid - h, mid + h)
    if s_mid == f.sign_at(lo):
        return (mid, hi)
    return (lo, mid)


def _grid_bits(width):
    """Smallest e with 2**-e <= width / 4."""
    w = Fraction(width)
    return w.denominator.bit_length() - w.numerator.bit_length() + 3


def refine_root(f, enclosure, target_width):
    """Shrink a sign-change enclosure to width at most ``target_width``.

    Tries a Newton step on a dyadic grid and certifies the result by a
    sign change around it; falls back to bisection when that fails.
    """
    target_width = Fraction(target_width)
    if target_width <= 0:
        raise ValueError("target width must be positive")
    lo, hi = enclosure
    lo, hi = Fraction(lo), Fraction(hi)
    if hi - lo <= target_width:
        return (lo, hi)
    s_lo = f.sign_at(lo)
    e = max(0, _grid_bits(target_width))
    grid = 1 << e
    h = Fraction(1, grid)
    while hi - lo > target_width:
        x = (lo + hi) / 2
        for _ in range(2 * e.bit_length() + 8):
            d = f.derivative(x)
            if d == 0:
                break
            nx = x - f(x) / d
            nx = Fraction(round(nx * grid), grid)
            if nx == x or not (lo < nx < hi):
                x = nx
                break
            x = nx
        a, b = x - h, x + h
        if lo <= a and b <= hi:
            sa, sb = f.sign_at(a), f.sign_at(b)
            if sa == s_lo and sb == -s_lo:
                return (a, b)
        for _ in range(4):
            if hi - lo <= target_width:
                break
            lo, hi = bisect_once(f, (lo, hi))
    return (lo, hi)


def rational_root_test(f):
    """True iff ``f`` has no rational root, i.e. is irreducible over Q.

    A monic integer cubic is reducible exactly when it has an integer
    root, and such a root divides the constant term.
    """
    r = abs(f.r)
    if r == 0:
        return False
    bound = _root_bound(f)
    d = 1
    while d * d <= r:
        if r % d == 0:
            for c in (d, r // d):
                if c <= bound and (f.sign_at(c) == 0 or f.sign_at(-c) == 0):
                    return False
        d += 1
    return True
