"""
Cubic orders Z[theta] with linear units theta and a*theta - b.

For a mutually cubic pair (a, b) the family

    f_{a,b,t}(X) = X^3 + ((a^3-1)^2 - b^3)/(a b^2) X^2 - a (a^3-1)/b X + 1
                   + t X (a X - b)

has theta and a*theta - b as units of Z[theta] whenever it is
irreducible.  The b = 1 subfamily with a = a_t growing like t^alpha is
the one whose unit lattices are studied in :mod:`cubicshapes.regshape`.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .errors import (ConsistencyError, NonIntegralCoefficients,
                     NotAUnit, NotTotallyReal)
from .exactnum import integer_nth_root_floor
from .polycubic import (MonicCubic, discriminant, isolate_real_roots,
                        rational_root_test, refine_root)

__all__ = [
    "FamilyParams",
    "CubicOrder",
    "AlphaSchedule",
    "LemmaCheck",
    "is_mutually_cubic",
    "build_family_polynomial",
    "build_ft",
    "irreducible_witness",
    "unit_norm_check",
    "schedule_a",
    "schedule_in_range",
    "choose_k",
    "verify_root_bound_lemma",
    "lemma_threshold",
    "irreducibility_threshold",
    "DEFAULT_C",
    "DEFAULT_ALPHAS",
]

DEFAULT_C = Fraction(9, 10)
DEFAULT_ALPHAS = tuple(Fraction(1, n) for n in (5, 6, 8, 10, 20, 100))


def is_mutually_cubic(a, b):
    """True iff a^3 = 1 (mod b) and b^3 = 1 (mod a)."""
    if a == 0 or b == 0:
        raise ValueError("a and b must be nonzero")
    ma, mb = abs(a), abs(b)
    return pow(a, 3, mb) == 1 % mb and pow(b, 3, ma) == 1 % ma


@dataclass(frozen=True)
class FamilyParams:
    a: int
    b: int
    t: int

    def __post_init__(self):
        if self.a <= 0:
            raise ValueError(f"a must be positive, got {self.a}")
        if self.b == 0:
            raise ValueError("b must be nonzero")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"a={self.a} and b={self.b} are not coprime")
        if not is_mutually_cubic(self.a, self.b):
            raise ValueError(f"({self.a}, {self.b}) is not a mutually cubic pair")


def build_family_polynomial(params):
    """Integer coefficients of f_{a,b,t}; integrality is checked, not assumed."""
    a, b, t = params.a, params.b, params.t
    c2 = Fraction((a ** 3 - 1) ** 2 - b ** 3, a * b * b)
    c1 = -a * Fraction(a ** 3 - 1, b)
    if c2.denominator != 1:
        raise NonIntegralCoefficients("X^2", c2)
    if c1.denominator != 1:
        raise NonIntegralCoefficients("X", c1)
    return MonicCubic(int(c2) + t * a, int(c1) - t * b, 1)


def build_ft(a, t):
    """f_{a,1,t} in closed form: p = a^2(a^3-2) + t a, q = -a(a^3-1) - t, r = 1."""
    if a < 1:
        raise ValueError("a must be at least 1")
    return MonicCubic(a * a * (a ** 3 - 2) + t * a, -a * (a ** 3 - 1) - t, 1)


def irreducible_witness(f, a, t):
    """Irreducibility verdict for f_{a,1,t} plus the witnesses f(1), f(-1).

    The witnesses are checked against their closed forms in a and t.
    """
    f1, fm1 = f(1), f(-1)
    want1 = a ** 5 - a ** 4 - 2 * a ** 2 + a + t * (a - 1) + 2
    want_m1 = a ** 5 + a ** 4 - 2 * a ** 2 - a + t * (a + 1)
    if f1 != want1 or fm1 != want_m1:
        raise ConsistencyError(
            f"f(1)={f1}, f(-1)={fm1} but closed forms give {want1}, {want_m1}")
    if f.r in (1, -1):
        verdict = f1 != 0 and fm1 != 0
    else:
        verdict = rational_root_test(f)
    return verdict, int(f1), int(fm1)


def _embedding_order(poly, roots, a, b):
    """Indices (into the ascending roots) of theta^(1), theta^(2), theta^(3).

    theta^(1) is the root closest to 0 and theta^(2) the remaining root
    closest to b/a; for b = 1 and t >= 1 these are the two positive roots.
    """
    target = Fraction(b, a)
    enc = list(roots)
    for bits in (16, 64, 256, 1024):
        enc = [refine_root(poly, e, Fraction(1, 1 << bits) * max(1, abs(e[0]), abs(e[1])))
               for e in enc]
        mids = [(lo + hi) / 2 for lo, hi in enc]
        slack = max(hi - lo for lo, hi in enc)
        by_zero = sorted(range(3), key=lambda i: abs(mids[i]))
        if abs(mids[by_zero[1]]) - abs(mids[by_zero[0]]) <= 2 * slack:
            continue
        first = by_zero[0]
        rest = sorted((i for i in range(3) if i != first),
                      key=lambda i: abs(mids[i] - target))
        if abs(mids[rest[1]] - target) - abs(mids[rest[0]] - target) <= 2 * slack:
            continue
        return (first, rest[0], rest[1])
    return (0, 1, 2)


@dataclass(frozen=True)
class CubicOrder:
    """The order Z[theta^(1)] for one member of the family.

    ``roots`` are ascending; ``embedding`` maps the conjugate index
    i = 0, 1, 2 (theta^(1), theta^(2), theta^(3)) to a position in
    ``roots``.
    """

    params: FamilyParams
    poly: MonicCubic
    roots: object
    disc: int
    embedding: tuple = field(default=(0, 1, 2))

    @classmethod
    def from_params(cls, params):
        poly = build_family_polynomial(params)
        if not rational_root_test(poly):
            raise ValueError(f"{poly} is reducible over Q")
        disc = discriminant(poly)
        if disc <= 0:
            raise NotTotallyReal(f"{poly} has discriminant {disc} <= 0")
        roots = isolate_real_roots(poly)
        emb = _embedding_order(poly, roots, params.a, params.b)
        order = cls(params, poly, roots, disc, emb)
        if params.b == 1 and params.t >= 1:
            lo1, _ = order.conjugate(0)
            lo2, _ = order.conjugate(1)
            _, hi3 = order.conjugate(2)
            if not (lo1 > 0 and lo2 > 0 and hi3 < 0):
                raise ConsistencyError(f"unexpected sign pattern for the roots of {poly}")
        return order

    @classmethod
    def family(cls, a, t, b=1):
        return cls.from_params(FamilyParams(a, b, t))

    @property
    def a(self):
        return self.params.a

    @property
    def b(self):
        return self.params.b

    @property
    def t(self):
        return self.params.t

    def conjugate(self, i):
        """Enclosure of theta^(i+1)."""
        return self.roots[self.embedding[i]]

    def conjugates(self):
        return tuple(self.conjugate(i) for i in range(3))


def unit_norm_check(order):
    """Exact norms of theta and a*theta - b; both must be +1 or -1."""
    f = order.poly
    a, b = order.a, order.b
    norm_theta = Fraction(-f.r)
    norm_linear = -(a ** 3) * f(Fraction(b, a))
    for name, n in (("theta", norm_theta), ("a*theta - b", norm_linear)):
        if n not in (1, -1):
            raise NotAUnit(f"N({name}) = {n} for {f}")
    return norm_theta, norm_linear


@dataclass(frozen=True)
class AlphaSchedule:
    """a_t = ceil(c t^alpha) with k the exponent used in the root bound."""

    alpha: Fraction
    c: Fraction = DEFAULT_C
    k: int = None

    def __post_init__(self):
        alpha, c = Fraction(self.alpha), Fraction(self.c)
        if not 0 < alpha < Fraction(1, 4):
            raise ValueError(f"alpha must lie in (0, 1/4), got {alpha}")
        # c = 1 is admitted so that a_t = t^alpha exactly is expressible
        if not 0 < c <= 1:
            raise ValueError(f"c must lie in (0, 1], got {c}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "c", c)
        if self.k is None:
            object.__setattr__(self, "k", choose_k(alpha))
        elif self.k < 1:
            raise ValueError("k must be positive")


def choose_k(alpha):
    """Largest integer k <= 1/alpha - 3, at least 1."""
    alpha = Fraction(alpha)
    if not 0 < alpha < Fraction(1, 4):
        raise ValueError(f"alpha must lie in (0, 1/4), got {alpha}")
    return max(1, (1 / alpha - 3).__floor__())


def schedule_a(t, sched):
    """ceil(c * t^alpha), computed exactly."""
    if t < 1:
        raise ValueError("t must be at least 1")
    p, q = sched.alpha.numerator, sched.alpha.denominator
    u, v = sched.c.numerator, sched.c.denominator
    num = u ** q * t ** p
    den = v ** q
    r = integer_nth_root_floor(num // den, q)
    return r if r ** q * den == num else r + 1


def schedule_in_range(t, a, alpha):
    """True iff a <= t^alpha, i.e. a^q <= t^p for alpha = p/q."""
    alpha = Fraction(alpha)
    return a ** alpha.denominator <= t ** alpha.numerator


@dataclass(frozen=True)
class LemmaCheck:
    """Signs of f at a^-k, 1/a and 1/a - a^-k; truthy iff the bound holds."""

    sign_at_a_minus_k: int
    sign_at_inv_a: int
    sign_at_inv_a_minus_a_minus_k: int

    @property
    def holds(self):
        return (self.sign_at_a_minus_k < 0 and self.sign_at_inv_a > 0
                and self.sign_at_inv_a_minus_a_minus_k < 0)

    def __bool__(self):
        return self.holds


def verify_root_bound_lemma(order, k):
    """Check |theta^(1)| <= a^-k and |theta^(2) - 1/a| <= a^-k by exact signs.

    With f(0) = 1 > 0, a negative value at a^-k puts theta^(1) in
    (0, a^-k); f(1/a) > 0 > f(1/a - a^-k) puts theta^(2) in
    (1/a - a^-k, 1/a).
    """
    if order.b != 1:
        raise ValueError("the root bound is stated for the b = 1 family")
    f, a = order.poly, order.a
    ak = Fraction(1, a ** k)
    return LemmaCheck(f.sign_at(ak), f.sign_at(Fraction(1, a)),
                      f.sign_at(Fraction(1, a) - ak))


def lemma_threshold(k, a_values, t_of_a):
    """Smallest a in ``a_values`` from which the root bound holds for all larger ones.

    ``t_of_a`` maps a to the t paired with it.  Returns None if the last
    value fails.
    """
    threshold = None
    for a in sorted(a_values):
        ok = bool(verify_root_bound_lemma(_bare_order(a, t_of_a(a)), k))
        if ok and threshold is None:
            threshold = a
        elif not ok:
            threshold = None
    return threshold


def irreducibility_threshold(a_max, t_values):
    """Smallest A with f_{a,1,t} irreducible for all A <= a <= a_max and given t."""
    threshold = 1
    for a in range(1, a_max + 1):
        for t in t_values:
            ok, _, _ = irreducible_witness(build_ft(a, t), a, t)
            if not ok:
                threshold = a + 1
    return threshold


def _bare_order(a, t):
    # verify_root_bound_lemma only needs the polynomial
    params = FamilyParams(a, 1, t)
    return CubicOrder(params, build_ft(a, t), None, 0)
