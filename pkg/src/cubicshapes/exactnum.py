"""
Exact integers and rationals, dyadic intervals and certified log/sqrt.

Integers are Python ``int`` and rationals are ``fractions.Fraction``; both
are exact and unbounded.  Real numbers that are not rational are handled
through :class:`DyadicInterval`, a closed interval whose endpoints are
dyadic rationals ``m * 2**e`` rounded outward to a working precision, so
that every operation returns an interval containing the exact result.
"""

from fractions import Fraction
from functools import lru_cache
import math

__all__ = [
    "DEFAULT_PRECISION",
    "DyadicInterval",
    "round_dyadic",
    "enclose_rational",
    "interval_log",
    "interval_sqrt",
    "integer_nth_root_floor",
    "log_abs_float",
]

DEFAULT_PRECISION = 128

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def round_dyadic(x, prec, up):
    """Round the rational ``x`` to a dyadic with about ``prec`` significant bits.

    Rounds toward +infinity when ``up`` is true and toward -infinity
    otherwise.  A dyadic input that already fits in ``prec`` bits is
    returned unchanged.
    """
    x = _frac(x)
    n, d = x.numerator, x.denominator
    if n == 0:
        return _ZERO
    shift = prec - (abs(n).bit_length() - d.bit_length())
    if shift >= 0:
        num, den = n << shift, d
    else:
        num, den = n, d << -shift
    q = -((-num) // den) if up else num // den
    if shift >= 0:
        return Fraction(q, 1 << shift)
    return Fraction(q << -shift)


def _is_dyadic(x):
    d = x.denominator
    return d & (d - 1) == 0


class DyadicInterval:
    """Closed interval ``[lo, hi]`` with dyadic endpoints.

    The constructor rounds ``lo`` down and ``hi`` up to ``prec`` bits, so
    any pair of rationals may be passed.  Arithmetic with ints, Fractions
    and other intervals rounds outward at the larger of the two working
    precisions.  Instances are immutable.
    """

    __slots__ = ("lo", "hi", "prec")

    def __init__(self, lo, hi=None, prec=DEFAULT_PRECISION):
        lo = _frac(lo)
        hi = lo if hi is None else _frac(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", round_dyadic(lo, prec, up=False))
        object.__setattr__(self, "hi", round_dyadic(hi, prec, up=True))
        object.__setattr__(self, "prec", prec)

    def __setattr__(self, name, value):
        raise AttributeError("DyadicInterval is immutable")

    def __reduce__(self):
        return (DyadicInterval, (self.lo, self.hi, self.prec))

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, DyadicInterval):
            return other
        if isinstance(other, (int, Fraction)):
            return DyadicInterval(other, other, self.prec)
        return NotImplemented

    def with_precision(self, prec):
        return DyadicInterval(self.lo, self.hi, prec)

    # -- queries ----------------------------------------------------------

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def is_exact(self):
        return self.lo == self.hi

    def contains(self, x):
        if isinstance(x, DyadicInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        x = _frac(x)
        return self.lo <= x <= self.hi

    __contains__ = contains

    def overlaps(self, other):
        return self.lo <= other.hi and other.lo <= self.hi

    def contains_zero(self):
        return self.lo <= 0 <= self.hi

    def is_positive(self):
        return self.lo > 0

    def is_negative(self):
        return self.hi < 0

    def compare(self, x):
        """Certified comparison against the rational ``x``.

        Returns -1, 0 or 1 when the whole interval is below, equal to or
        above ``x``; ``None`` when the interval straddles ``x``.
        """
        x = _frac(x)
        if self.hi < x:
            return -1
        if self.lo > x:
            return 1
        if self.lo == self.hi == x:
            return 0
        return None

    def __float__(self):
        return float(self.mid)

    def __repr__(self):
        return f"DyadicInterval({float(self.lo)!r}, {float(self.hi)!r}, prec={self.prec})"

    def __eq__(self, other):
        if not isinstance(other, DyadicInterval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return DyadicInterval(-self.hi, -self.lo, self.prec)

    def __pos__(self):
        return self

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return DyadicInterval(0, max(-self.lo, self.hi), self.prec)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = max(self.prec, other.prec)
        return DyadicInterval(self.lo + other.lo, self.hi + other.hi, prec)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = max(self.prec, other.prec)
        return DyadicInterval(self.lo - other.hi, self.hi - other.lo, prec)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = max(self.prec, other.prec)
        if self.lo >= 0 and other.lo >= 0:
            return DyadicInterval(self.lo * other.lo, self.hi * other.hi, prec)
        ps = (self.lo * other.lo, self.lo * other.hi,
              self.hi * other.lo, self.hi * other.hi)
        return DyadicInterval(min(ps), max(ps), prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            a, b = self.lo / other, self.hi / other
            return DyadicInterval(min(a, b), max(a, b), self.prec)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.contains_zero():
            raise ZeroDivisionError("divisor interval contains zero")
        prec = max(self.prec, other.prec)
        qs = (self.lo / other.lo, self.lo / other.hi,
              self.hi / other.lo, self.hi / other.hi)
        return DyadicInterval(min(qs), max(qs), prec)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def square(self):
        a = abs(self)
        return DyadicInterval(a.lo * a.lo, a.hi * a.hi, self.prec)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        if n % 2 == 0:
            a = abs(self)
            return DyadicInterval(a.lo ** n, a.hi ** n, self.prec)
        return DyadicInterval(self.lo ** n, self.hi ** n, self.prec)

    def hull(self, other):
        prec = max(self.prec, other.prec)
        return DyadicInterval(min(self.lo, other.lo), max(self.hi, other.hi), prec)


def enclose_rational(x, bits=DEFAULT_PRECISION):
    """Return a dyadic interval of about ``bits`` bits containing ``x``.

    Dyadic inputs come back as point intervals.
    """
    if bits < 1:
        raise ValueError("bits must be positive")
    x = _frac(x)
    if _is_dyadic(x):
        # keep dyadic inputs exact whatever the requested size
        return DyadicInterval(x, x, max(bits, abs(x.numerator).bit_length()))
    return DyadicInterval(x, x, bits)


# --------------------------------------------------------------------------
# logarithm
# --------------------------------------------------------------------------

def _atanh_series(s, wp, log2_inv_s):
    """Enclosure of atanh(s) for a rational with |s| <= 2**-log2_inv_s.

    Sums the odd power series in interval arithmetic and adds a
    rigorous bound for the tail.
    """
    if s == 0:
        return DyadicInterval(0, 0, wp)
    # tail after the last term is at most |s|**(2n+3) / ((2n+3)(1-s^2))
    n_terms = int(wp / (2 * log2_inv_s)) + 2
    S = DyadicInterval(s, s, wp)
    S2 = S.square()
    term = S
    total = S
    for j in range(1, n_terms + 1):
        term = term * S2
        total = total + term / (2 * j + 1)
    tail = Fraction(1, 1 << wp)
    return DyadicInterval(total.lo - tail, total.hi + tail, wp)


@lru_cache(maxsize=64)
def _log2_enclosure(wp):
    # log 2 = 2 atanh(1/3)
    return 2 * _atanh_series(Fraction(1, 3), wp + 4, math.log2(3))


@lru_cache(maxsize=4096)
def _log_point(y, prec):
    """Enclosure of log(y) for a positive rational y."""
    if y == 1:
        return DyadicInterval(0, 0, prec)
    k = y.numerator.bit_length() - y.denominator.bit_length()
    z = y / (Fraction(2) ** k)
    if z > Fraction(4, 3):
        z /= 2
        k += 1
    elif z < Fraction(2, 3):
        z *= 2
        k -= 1
    wp = prec + 16 + abs(k).bit_length() + prec.bit_length()
    s = (z - 1) / (z + 1)  # |s| <= 1/5 on [2/3, 4/3]
    result = 2 * _atanh_series(s, wp, math.log2(5))
    if k:
        result = result + k * _log2_enclosure(wp)
    return result.with_precision(prec)


def interval_log(x):
    """Outward-rounded enclosure of ``{log y : y in x}``.

    Raises ``ValueError`` if the interval reaches zero or below.
    """
    if x.lo <= 0:
        raise ValueError(f"log of interval with nonpositive lower endpoint {float(x.lo)}")
    prec = x.prec
    lo = _log_point(x.lo, prec)
    hi = lo if x.hi == x.lo else _log_point(x.hi, prec)
    return DyadicInterval(lo.lo, hi.hi, prec)


# --------------------------------------------------------------------------
# square root
# --------------------------------------------------------------------------

def _sqrt_bound(y, prec, up):
    if y == 0:
        return _ZERO
    n, d = y.numerator, y.denominator
    # scale so that y * 4**w has about 2*prec + 4 bits before the point
    w = prec + 2 - (n.bit_length() - d.bit_length()) // 2
    if w >= 0:
        num, den = n << (2 * w), d
    else:
        num, den = n, d << (-2 * w)
    if up:
        m = -((-num) // den)
        r = math.isqrt(m)
        if r * r < m:
            r += 1
    else:
        r = math.isqrt(num // den)
    return Fraction(r, 1 << w) if w >= 0 else Fraction(r << -w)


def interval_sqrt(x):
    """Outward-rounded enclosure of ``{sqrt(y) : y in x}``."""
    if x.lo < 0:
        raise ValueError(f"sqrt of interval with negative lower endpoint {float(x.lo)}")
    prec = x.prec
    return DyadicInterval(_sqrt_bound(x.lo, prec, up=False),
                          _sqrt_bound(x.hi, prec, up=True), prec)


@lru_cache(maxsize=64)
def sqrt3(prec=DEFAULT_PRECISION):
    return interval_sqrt(DyadicInterval(3, 3, prec))


# --------------------------------------------------------------------------
# integer roots
# --------------------------------------------------------------------------

def integer_nth_root_floor(n, k):
    """Largest ``r`` with ``r**k <= n`` (Newton iteration on integers)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 1:
        raise ValueError("k must be positive")
    if n < 2 or k == 1:
        return n
    x = 1 << -(-n.bit_length() // k)  # 2**ceil(bits/k) > n**(1/k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def log_abs_float(x):
    """``log|x|`` as a float for a nonzero rational of any size."""
    x = _frac(x)
    if x == 0:
        raise ValueError("log of zero")
    return math.log(abs(x.numerator)) - math.log(x.denominator)
