"""
Unit lattices of the orders Z[theta]: log embeddings, regulators,
fundamental-unit certificates and shapes.

The log embedding of a unit u is (log|u^(1)|, log|u^(2)|, log|u^(3)|), a
vector in the trace-zero plane of R^3.  The shape of the lattice spanned
by the embeddings of theta and a*theta - b is obtained by mapping that
plane similarly onto R^2 ((-1, 0, 1) -> (1, 0), (0, -1, 1) -> (1/2, sqrt3/2)),
dividing the two planar vectors as complex numbers and reducing the
quotient modulo SL2(Z).
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (CertificateNotApplicable, ConsistencyError,
                     InconclusiveCertificate, PrecisionError)
from .exactnum import (DEFAULT_PRECISION, DyadicInterval, interval_log,
                       interval_sqrt, sqrt3)
from .modular import (ExactPoint, ExactReducedShape, ReducedShape,
                      UpperHalfPoint, reduce_exact, reduce_sl2)
from .polycubic import refine_root

__all__ = [
    "LogEmbedding",
    "PlaneBasis",
    "CertStatus",
    "CusickCertificate",
    "TaylorDiagnostics",
    "ShapeData",
    "RootTracker",
    "log_embedding_of_unit",
    "combine_embeddings",
    "regulator_pair",
    "cusick_certify",
    "similarity_to_plane",
    "basis_to_tau",
    "shape_from_embeddings",
    "shape_data",
    "shape_of_order",
    "shape_via_gram_oracle",
    "gram_tau",
    "limit_alpha_prime",
    "limit_shape",
    "limit_lattice_basis",
    "taylor_diagnostics",
    "MAX_PRECISION",
]

MAX_PRECISION = 8192
CUSICK_BOUND = Fraction(1, 8)


class RootTracker:
    """Refines root enclosures on demand for one order.

    Holds local refinement state so that a computation at increasing
    precision reuses earlier work.  Not meant to be shared.
    """

    def __init__(self, order):
        self.order = order
        self.enc = [order.conjugate(i) for i in range(3)]

    def linear(self, i, s, u, prec):
        """Interval for s*theta^(i+1) - u with relative width about 2**-prec."""
        f = self.order.poly
        for _ in range(64):
            lo, hi = self.enc[i]
            a, b = s * lo - u, s * hi - u
            if a > b:
                a, b = b, a
            if not (a <= 0 <= b):
                mag = min(abs(a), abs(b))
                if (b - a) <= mag / (1 << (prec + 2)):
                    return DyadicInterval(a, b, prec + 8)
                target = mag / (abs(s) * (1 << (prec + 4)))
            else:
                target = (hi - lo) / (1 << 64)
            self.enc[i] = refine_root(f, self.enc[i], target)
        raise PrecisionError(f"could not separate {s}*theta - {u} from zero")

    def root(self, i, prec):
        return self.linear(i, 1, 0, prec)


@dataclass(frozen=True)
class LogEmbedding:
    """Interval log embedding of a unit; components follow theta^(1..3)."""

    components: tuple

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def trace(self):
        c = self.components
        return c[0] + c[1] + c[2]

    def scaled(self, k):
        return LogEmbedding(tuple(k * c for c in self.components))

    def dot(self, other):
        return sum((a * b for a, b in zip(self, other)), DyadicInterval(0, 0, self[0].prec))


def log_embedding_of_unit(order, unit, prec=DEFAULT_PRECISION, tracker=None):
    """Log embedding of the unit s*theta - u, given as ``unit = (s, u)``."""
    s, u = unit
    tracker = tracker or RootTracker(order)
    comps = []
    for i in range(3):
        val = tracker.linear(i, s, u, prec)
        comps.append(interval_log(abs(val)).with_precision(prec))
    emb = LogEmbedding(tuple(comps))
    if not emb.trace().contains_zero():
        raise ConsistencyError(f"log embedding of {s}*theta - {u} is not trace zero")
    return emb


def combine_embeddings(e1, e2, m, n):
    """Embedding of u1^m u2^n."""
    return LogEmbedding(tuple(m * a + n * b for a, b in zip(e1, e2)))


def regulator_pair(u1, u2):
    """|log|u1^(1)| log|u2^(2)| - log|u1^(2)| log|u2^(1)||."""
    return abs(u1[0] * u2[1] - u1[1] * u2[0])


class CertStatus(str, Enum):
    CERTIFIED = "CertifiedFundamental"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CusickCertificate:
    status: CertStatus
    ratio: DyadicInterval
    log_d_over_4: DyadicInterval

    @property
    def ratio_hi(self):
        return self.ratio.hi

    @property
    def settled(self):
        """True if more precision cannot change the verdict."""
        return self.status is CertStatus.CERTIFIED or self.ratio.lo >= CUSICK_BOUND


def cusick_certify(rprime, disc, prec=None):
    """Decide whether a unit pair with relative regulator ``rprime`` is fundamental.

    Since every order has R / log^2(D/4) >= 1/16, a pair with
    0 < R' / log^2(D/4) < 1/8 has index 1 in the unit group.
    """
    if disc <= 16:
        raise CertificateNotApplicable(f"discriminant {disc} <= 16")
    prec = prec or rprime.prec
    log_d4 = interval_log(DyadicInterval(Fraction(disc, 4), Fraction(disc, 4), prec))
    denom = log_d4.square()
    ratio = rprime / denom
    ok = rprime.lo > 0 and rprime.hi / (log_d4.lo * log_d4.lo) < CUSICK_BOUND
    status = CertStatus.CERTIFIED if ok else CertStatus.INCONCLUSIVE
    return CusickCertificate(status, ratio, log_d4)


def similarity_to_plane(v, prec=None):
    """(x1, x2, x3) -> (-x1 - x2/2, -(sqrt3/2) x2) for a trace-zero vector."""
    x1, x2 = v[0], v[1]
    if prec is None:
        prec = getattr(x1, "prec", DEFAULT_PRECISION)
    if not isinstance(x1, DyadicInterval):
        x1 = DyadicInterval(x1, x1, prec)
    if not isinstance(x2, DyadicInterval):
        x2 = DyadicInterval(x2, x2, prec)
    return (-x1 - x2 / 2, -(sqrt3(prec) * x2) / 2)


@dataclass(frozen=True)
class PlaneBasis:
    v: tuple
    w: tuple

    def det(self):
        return self.v[0] * self.w[1] - self.v[1] * self.w[0]


def basis_to_tau(basis):
    """tau = w / v as complex numbers; v and w are swapped if Im would be negative.

    Returns ``(tau, swapped)``.
    """
    v, w = basis.v, basis.w
    det = basis.det()
    if det.contains_zero():
        raise PrecisionError("basis determinant not separated from zero")
    swapped = det.hi < 0
    if swapped:
        v, w = w, v
        det = -det
    norm = v[0].square() + v[1].square()
    x = (v[0] * w[0] + v[1] * w[1]) / norm
    y = det / norm
    return UpperHalfPoint(x, y), swapped


def shape_from_embeddings(e1, e2):
    """Reduced shape of the lattice spanned by two log embeddings."""
    basis = PlaneBasis(similarity_to_plane(e1), similarity_to_plane(e2))
    tau, _ = basis_to_tau(basis)
    return reduce_sl2(tau)


def gram_tau(e1, e2):
    """tau from the Gram matrix of two trace-zero vectors in R^3.

    The orientation is read off the triple product with (1, 1, 1) so that
    it matches the planar computation.
    """
    g11, g22, g12 = e1.dot(e1), e2.dot(e2), e1.dot(e2)
    c = e1.components, e2.components
    # det[(1,1,1), e1, e2]
    triple = ((c[0][1] * c[1][2] - c[0][2] * c[1][1])
              - (c[0][0] * c[1][2] - c[0][2] * c[1][0])
              + (c[0][0] * c[1][1] - c[0][1] * c[1][0]))
    if triple.contains_zero():
        raise PrecisionError("orientation of the unit pair not certified")
    if triple.hi < 0:
        g11, g22 = g22, g11
    gram_det = g11 * g22 - g12.square()
    if gram_det.lo <= 0:
        raise PrecisionError("Gram determinant not certified positive")
    return UpperHalfPoint(g12 / g11, interval_sqrt(gram_det) / g11)


@dataclass(frozen=True)
class ShapeData:
    """Everything computed on the way from an order to its shape."""

    prec: int
    emb_theta: LogEmbedding
    emb_linear: LogEmbedding
    regulator: DyadicInterval
    certificate: CusickCertificate
    basis: PlaneBasis
    tau: UpperHalfPoint
    swapped: bool
    reduced: ReducedShape


def _shape_at(order, prec, tracker):
    e1 = log_embedding_of_unit(order, (1, 0), prec, tracker)
    e2 = log_embedding_of_unit(order, (order.a, order.b), prec, tracker)
    reg = regulator_pair(e1, e2)
    cert = cusick_certify(reg, order.disc, prec)
    if cert.status is not CertStatus.CERTIFIED:
        return ShapeData(prec, e1, e2, reg, cert, None, None, None, None)
    basis = PlaneBasis(similarity_to_plane(e1, prec), similarity_to_plane(e2, prec))
    tau, swapped = basis_to_tau(basis)
    return ShapeData(prec, e1, e2, reg, cert, basis, tau, swapped, reduce_sl2(tau))


def shape_data(order, epsilon=Fraction(1, 10 ** 6), prec=DEFAULT_PRECISION,
               max_prec=MAX_PRECISION):
    """Run the shape pipeline with precision doubling until ``epsilon`` is met.

    Returns the final :class:`ShapeData`; if the certificate stays
    inconclusive the returned data has ``reduced is None``.
    """
    epsilon = Fraction(epsilon)
    tracker = RootTracker(order)
    last = None
    while prec <= max_prec:
        try:
            data = _shape_at(order, prec, tracker)
        except PrecisionError:
            prec *= 2
            continue
        last = data
        if data.reduced is None:
            if data.certificate.settled:
                return data
        elif data.reduced.tau.width() <= epsilon:
            return data
        prec *= 2
    if last is None:
        raise PrecisionError(f"no usable enclosure below {max_prec} bits")
    if last.reduced is not None:
        raise PrecisionError(f"could not reach width {epsilon} below {max_prec} bits")
    return last


def shape_of_order(order, epsilon=Fraction(1, 10 ** 6), prec=DEFAULT_PRECISION):
    """Reduced shape of the unit lattice of ``order`` (theta, a*theta - b basis).

    Refuses with :class:`InconclusiveCertificate` unless the pair is
    certified fundamental.
    """
    data = shape_data(order, epsilon, prec)
    if data.reduced is None:
        raise InconclusiveCertificate(
            f"ratio {float(data.certificate.ratio.lo):.6g}..{float(data.certificate.ratio.hi):.6g}"
            " not certified below 1/8")
    return data.reduced


def shape_via_gram_oracle(order, epsilon=Fraction(1, 10 ** 6), prec=DEFAULT_PRECISION,
                          max_prec=MAX_PRECISION):
    """Independent route to the shape via 3D inner products of the log vectors."""
    epsilon = Fraction(epsilon)
    tracker = RootTracker(order)
    while prec <= max_prec:
        try:
            e1 = log_embedding_of_unit(order, (1, 0), prec, tracker)
            e2 = log_embedding_of_unit(order, (order.a, order.b), prec, tracker)
            cert = cusick_certify(regulator_pair(e1, e2), order.disc, prec)
            if cert.status is not CertStatus.CERTIFIED:
                if cert.settled:
                    raise InconclusiveCertificate("unit pair not certified fundamental")
                prec *= 2
                continue
            red = reduce_sl2(gram_tau(e1, e2))
        except PrecisionError:
            prec *= 2
            continue
        if red.tau.width() <= epsilon:
            return red
        prec *= 2
    raise PrecisionError(f"could not reach width {epsilon} below {max_prec} bits")


# --------------------------------------------------------------------------
# limit curve
# --------------------------------------------------------------------------

def limit_alpha_prime(alpha):
    alpha = Fraction(alpha)
    return (1 + alpha / 2) / (3 * alpha)


def limit_shape(alpha, eps2_exponent=None):
    """Exact limit point omega2/omega1 for exponent ``alpha`` and its reduction.

    omega1 = alpha' + i sqrt3/6 and omega2 = 1/2 + i sqrt3/2 with
    alpha' = (1 + alpha/2) / (3 alpha).  Returns ``(tau, reduced)`` with
    ``tau`` an :class:`ExactPoint`.

    ``eps2_exponent`` is the growth exponent sigma of |eps2| (log|eps2| /
    log t -> sigma).  The closed form above corresponds to the default
    sigma = 1 - 3 alpha; for general sigma the rescaled basis is
    v' = 1 + alpha*rho, w' = (1 - sigma)*rho with rho = exp(i pi/3), so
    tau = (1 - sigma)(rho + alpha) / (1 + alpha + alpha^2).
    """
    alpha = Fraction(alpha)
    if not 0 < alpha < Fraction(1, 4):
        raise ValueError(f"alpha must lie in (0, 1/4), got {alpha}")
    if eps2_exponent is None:
        ap = limit_alpha_prime(alpha)
        den = ap * ap + Fraction(1, 12)
        tau = ExactPoint((ap / 2 + Fraction(1, 4)) / den, (ap / 2 - Fraction(1, 12)) / den)
    else:
        scale = (1 - Fraction(eps2_exponent)) / (1 + alpha + alpha * alpha)
        tau = ExactPoint(scale * (Fraction(1, 2) + alpha), scale / 2)
    return tau, reduce_exact(tau)


def limit_lattice_basis(alpha, prec=DEFAULT_PRECISION):
    """Planar basis ((1 + alpha/2)/(3 alpha), sqrt3/6), (1/2, sqrt3/2) as intervals."""
    ap = limit_alpha_prime(alpha)
    r3 = sqrt3(prec)
    v = (DyadicInterval(ap, ap, prec), r3 / 6)
    w = (DyadicInterval(Fraction(1, 2), Fraction(1, 2), prec), r3 / 2)
    return PlaneBasis(v, w)


# --------------------------------------------------------------------------
# root expansions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class TaylorDiagnostics:
    delta1: DyadicInterval
    delta2: DyadicInterval
    eps1: DyadicInterval
    eps2: DyadicInterval


def taylor_diagnostics(order, prec=DEFAULT_PRECISION, rel_bits=20, max_prec=MAX_PRECISION):
    """Remainders of the first-order expansions of theta^(1) at 0 and theta^(2) at 1/a.

    delta1 = (t + a(a^3 - 1)) theta1 - 1
    delta2 = -f(1/a) - f'(1/a) (theta2 - 1/a)
    eps1   = t theta1
    eps2   = t (a theta2 - 1)

    Both remainders come out of heavy cancellation, so the precision is
    raised until each has relative width below ``2**-rel_bits`` (or the
    cap is hit).
    """
    a, t, f = order.a, order.t, order.poly
    tracker = RootTracker(order)
    inv_a = Fraction(1, a)
    f_inv_a, df_inv_a = f(inv_a), f.derivative(inv_a)
    while True:
        th1 = tracker.root(0, prec)
        gap2 = tracker.linear(1, a, 1, prec)  # a*theta2 - 1
        delta1 = (t + a * (a ** 3 - 1)) * th1 - 1
        delta2 = -f_inv_a - df_inv_a * (gap2 / a)
        sharp = all(not d.contains_zero() and d.width <= abs(d.lo) / (1 << rel_bits)
                    for d in (delta1, delta2))
        if sharp or prec >= max_prec:
            return TaylorDiagnostics(delta1, delta2, t * th1, t * gap2)
        prec *= 2
