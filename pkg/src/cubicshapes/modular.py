"""
Points of the upper half plane and their SL2(Z) reduction.

Two representations are used.  :class:`UpperHalfPoint` holds interval
coordinates and is reduced with certified comparisons; any undecidable
comparison raises :class:`PrecisionError`.  :class:`ExactPoint` holds
``x + i*s*sqrt(3)`` with rational ``x`` and ``s``; this set is closed
under SL2(Z), so those points reduce with no rounding at all.

Fundamental domain convention: Re tau in [-1/2, 1/2), |tau| >= 1, and on
the arc |tau| = 1 only Re tau >= 0 is kept, except for the corner
-1/2 + i sqrt(3)/2 which represents the orbit of the hexagonal point.
"""

from dataclasses import dataclass
from fractions import Fraction
import itertools
import math

from .errors import PrecisionError
from .exactnum import DyadicInterval, interval_log, interval_sqrt, sqrt3

__all__ = [
    "IDENTITY",
    "UpperHalfPoint",
    "ReducedShape",
    "ExactPoint",
    "ExactReducedShape",
    "mat_mul",
    "mobius",
    "reduce_sl2",
    "reduce_exact",
    "hyperbolic_distance",
    "quotient_distance",
    "in_fundamental_domain",
]

IDENTITY = (1, 0, 0, 1)
_HALF = Fraction(1, 2)
_MAX_STEPS = 100000


def mat_mul(g, h):
    a, b, c, d = g
    e, f, k, l = h
    return (a * e + b * k, a * f + b * l, c * e + d * k, c * f + d * l)


def _translate(n):
    return (1, n, 0, 1)


_S = (0, -1, 1, 0)


@dataclass(frozen=True)
class UpperHalfPoint:
    x: DyadicInterval
    y: DyadicInterval

    def __post_init__(self):
        if self.y.lo <= 0:
            raise PrecisionError("imaginary part not certified positive")

    @property
    def prec(self):
        return max(self.x.prec, self.y.prec)

    def abs2(self):
        return self.x.square() + self.y.square()

    def as_complex(self):
        return complex(float(self.x), float(self.y))

    def contains(self, z):
        """Membership of an exact point (ExactPoint or (x, y) rationals)."""
        if isinstance(z, ExactPoint):
            return self.x.contains(z.x) and z.im_interval(self.prec + 8).overlaps(self.y)
        x, y = z
        return self.x.contains(x) and self.y.contains(y)

    def overlaps(self, other):
        return self.x.overlaps(other.x) and self.y.overlaps(other.y)

    def width(self):
        return max(self.x.width, self.y.width)

    @classmethod
    def from_rationals(cls, x, y, prec=128):
        return cls(DyadicInterval(x, x, prec), DyadicInterval(y, y, prec))


@dataclass(frozen=True)
class ReducedShape:
    """A reduced point ``tau`` together with ``g`` such that g * (input) = tau."""

    tau: UpperHalfPoint
    g: tuple


def mobius(g, z):
    """Action of the integer matrix g (det 1) on an interval point."""
    a, b, c, d = g
    x, y = z.x, z.y
    # (a z + b)/(c z + d) = ((a x + b)(c x + d) + a c y^2 + i y) / |c z + d|^2
    cx_d = c * x + d
    den = cx_d.square() + (c * c) * y.square()
    num_re = (a * x + b) * cx_d + (a * c) * y.square()
    return UpperHalfPoint(num_re / den, y / den)


def _apply_s(z):
    r2 = z.abs2()
    return UpperHalfPoint(-z.x / r2, z.y / r2)


def _floor_half_shift(x):
    """floor(x + 1/2), certified over the interval x."""
    lo = math.floor(x.lo + _HALF)
    hi = math.floor(x.hi + _HALF)
    if lo != hi:
        raise PrecisionError("real part straddles a translation boundary")
    return lo


def reduce_sl2(tau, max_steps=_MAX_STEPS):
    """Move ``tau`` into the fundamental domain with translations and inversions."""
    g = IDENTITY
    z = tau
    for _ in range(max_steps):
        n = _floor_half_shift(z.x)
        if n:
            z = UpperHalfPoint(z.x - n, z.y)
            g = mat_mul(_translate(-n), g)
        side = z.abs2().compare(1)
        if side is None:
            raise PrecisionError("|tau| straddles 1")
        if side > 0:
            return ReducedShape(z, g)
        if side < 0:
            z = _apply_s(z)
            g = mat_mul(_S, g)
            continue
        # exactly on the unit circle
        xs = z.x.compare(0)
        if xs is None:
            raise PrecisionError("real part straddles 0 on the unit circle")
        if xs < 0 and z.x.compare(-_HALF) != 0:
            z = _apply_s(z)
            g = mat_mul(_S, g)
        return ReducedShape(z, g)
    raise PrecisionError("reduction did not terminate")


def in_fundamental_domain(z):
    """Certified membership test for an interval point (None if undecidable)."""
    if z.x.lo < -_HALF or z.x.hi >= _HALF:
        return False if (z.x.hi < -_HALF or z.x.lo >= _HALF) else None
    side = z.abs2().compare(1)
    if side is None:
        return None
    if side < 0:
        return False
    if side == 0:
        return z.x.compare(0) in (0, 1) or z.x.compare(-_HALF) == 0
    return True


# --------------------------------------------------------------------------
# exact points x + i s sqrt(3)
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ExactPoint:
    """The point ``x + i * s * sqrt(3)`` with rational ``x`` and ``s > 0``."""

    x: Fraction
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "s", Fraction(self.s))
        if self.s <= 0:
            raise ValueError("imaginary part must be positive")

    def abs2(self):
        return self.x * self.x + 3 * self.s * self.s

    def im_interval(self, prec=128):
        return self.s * sqrt3(prec)

    def to_interval(self, prec=128):
        return UpperHalfPoint(DyadicInterval(self.x, self.x, prec), self.im_interval(prec))

    def __complex__(self):
        return complex(float(self.x), float(self.s) * math.sqrt(3))

    @property
    def imag(self):
        return float(self.s) * math.sqrt(3)

    def mobius(self, g):
        a, b, c, d = g
        cx_d = c * self.x + d
        den = cx_d * cx_d + 3 * c * c * self.s * self.s
        re = ((a * self.x + b) * cx_d + 3 * a * c * self.s * self.s) / den
        return ExactPoint(re, self.s / den)

    def __str__(self):
        return f"{self.x} + {self.s}*sqrt(3)*i"


@dataclass(frozen=True)
class ExactReducedShape:
    tau: ExactPoint
    g: tuple


def reduce_exact(tau, max_steps=_MAX_STEPS):
    """Exact reduction of a point x + i s sqrt(3)."""
    g = IDENTITY
    z = tau
    for _ in range(max_steps):
        n = math.floor(z.x + _HALF)
        if n:
            z = ExactPoint(z.x - n, z.s)
            g = mat_mul(_translate(-n), g)
        r2 = z.abs2()
        if r2 > 1:
            return ExactReducedShape(z, g)
        if r2 < 1 or (z.x < 0 and z.x != -_HALF):
            z = z.mobius(_S)
            g = mat_mul(_S, g)
            if r2 < 1:
                continue
        return ExactReducedShape(z, g)
    raise RuntimeError("reduction did not terminate")


# --------------------------------------------------------------------------
# hyperbolic distance
# --------------------------------------------------------------------------

def _as_interval_point(z, prec):
    if isinstance(z, ExactPoint):
        return z.to_interval(prec)
    return z


def hyperbolic_distance(z, w, prec=None):
    """Interval enclosure of the distance between two points of H.

    Uses d = 2 log((|z - w| + |z - conj(w)|) / (2 sqrt(Im z Im w))).
    """
    if prec is None:
        prec = max(getattr(z, "prec", 128), getattr(w, "prec", 128))
    z = _as_interval_point(z, prec)
    w = _as_interval_point(w, prec)
    dx2 = (z.x - w.x).square()
    near = interval_sqrt(dx2 + (z.y - w.y).square())
    far = interval_sqrt(dx2 + (z.y + w.y).square())
    ratio = (near + far) / (2 * interval_sqrt(z.y * w.y))
    if ratio.lo < 1:
        ratio = DyadicInterval(1, max(ratio.hi, Fraction(1)), ratio.prec)
    return 2 * interval_log(ratio)


def _small_sl2(bound=2):
    mats = set()
    rng = range(-bound, bound + 1)
    for a, b, c, d in itertools.product(rng, repeat=4):
        if a * d - b * c == 1:
            # g and -g act identically
            if (c, d) < (0, 0) or (c == 0 and d == 0 and a < 0):
                continue
            mats.add((a, b, c, d))
    return sorted(mats)


_CANDIDATES = _small_sl2(2)


def _float_dist(z, w):
    return math.acosh(1 + abs(z - w) ** 2 / (2 * z.imag * w.imag))


def quotient_distance(z, w, prec=None):
    """Distance in SL2(Z)\\H between two points of the fundamental domain.

    Minimises over the images g*w for integer matrices with entries
    bounded by 2, which covers every translate of the fundamental domain
    adjacent to it.  Returns an interval.
    """
    if prec is None:
        prec = max(getattr(z, "prec", 128), getattr(w, "prec", 128))
    zi = _as_interval_point(z, prec)
    zc = zi.as_complex() if isinstance(zi, UpperHalfPoint) else complex(zi)
    if isinstance(w, ExactPoint):
        images = [(g, w.mobius(g)) for g in _CANDIDATES]
        approx = [(_float_dist(zc, complex(im)), g, im) for g, im in images]
    else:
        wc = w.as_complex()
        approx = []
        for g in _CANDIDATES:
            a, b, c, d = g
            img = (a * wc + b) / (c * wc + d)
            approx.append((_float_dist(zc, img), g, None))
    approx.sort(key=lambda item: item[0])
    best = None
    for dist, g, img in approx:
        if dist > approx[0][0] + 1e-6:
            break
        target = img if img is not None else mobius(g, w)
        d = hyperbolic_distance(zi, target, prec)
        if best is None or d.lo < best.lo:
            best = d if best is None else DyadicInterval(min(best.lo, d.lo), min(best.hi, d.hi), prec)
    return best
