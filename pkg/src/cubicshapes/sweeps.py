"""
Parameter sweeps over the family of orders.

Two kinds of sweep are supported: t varies with (a, b) fixed, or a = a_t
follows the schedule ceil(c t^alpha).  Each (alpha, t) point gives one
:class:`SweepRecord`.  Records are pure functions of their inputs, so a
sweep may be evaluated in a process pool; results are always returned in
(alpha, t) order.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
import math

import numpy as np

from .errors import NotTotallyReal, PrecisionError
from .exactnum import DEFAULT_PRECISION, log_abs_float
from .modular import ExactPoint, quotient_distance
from .orders import (AlphaSchedule, CubicOrder, DEFAULT_C, FamilyParams,
                     choose_k, schedule_a, schedule_in_range,
                     verify_root_bound_lemma)
from .regshape import (CertStatus, limit_alpha_prime, limit_shape, shape_data,
                       taylor_diagnostics)

__all__ = [
    "HEXAGONAL_POINT",
    "SweepConfig",
    "SweepRecord",
    "ExponentFit",
    "sweep_point",
    "t_sweep_fixed_ab",
    "alpha_sweep",
    "exponent_fit",
    "cusp_escape_table",
    "CuspRow",
    "growth_summary",
]

HEXAGONAL_POINT = ExactPoint(Fraction(1, 2), Fraction(1, 2))


@dataclass(frozen=True)
class SweepConfig:
    alphas: tuple = ()
    c: Fraction = DEFAULT_C
    t_grid: tuple = ()
    epsilon: Fraction = Fraction(1, 10 ** 6)
    fixed_pairs: tuple = ()
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(Fraction(a) for a in self.alphas))
        object.__setattr__(self, "c", Fraction(self.c))
        object.__setattr__(self, "epsilon", Fraction(self.epsilon))
        object.__setattr__(self, "t_grid", tuple(int(t) for t in self.t_grid))
        if any(b <= a for a, b in zip(self.t_grid, self.t_grid[1:])):
            raise ValueError("t grid must be strictly increasing")
        for alpha in self.alphas:
            if not 0 < alpha < Fraction(1, 4):
                raise ValueError(f"alpha must lie in (0, 1/4), got {alpha}")


@dataclass
class SweepRecord:
    """One order of a sweep and everything measured on it."""

    t: int
    a: int
    b: int = 1
    alpha: Fraction = None
    k: int = None
    disc: int = None
    delta1: object = None
    delta2: object = None
    eps1: object = None
    eps2: object = None
    regulator: object = None
    cusick_ratio: object = None
    cert: CertStatus = None
    tau: object = None
    reduced: object = None
    g: tuple = None
    dist_to_limit: object = None
    lemma_holds: bool = None
    flags: list = field(default_factory=list)
    error: str = None

    @property
    def ok(self):
        return self.error is None and self.cert is CertStatus.CERTIFIED


def sweep_point(a, b, t, alpha=None, epsilon=Fraction(1, 10 ** 6),
                prec=DEFAULT_PRECISION, target=None):
    """Build, certify and shape one order; failures are recorded, not raised.

    ``target`` is the exact point distances are measured to (defaults to
    the limit point for ``alpha``, or the hexagonal point without one).
    """
    rec = SweepRecord(t=t, a=a, b=b, alpha=alpha)
    if alpha is not None:
        rec.k = choose_k(alpha)
        if not schedule_in_range(t, a, alpha):
            rec.flags.append("ScheduleOutOfRange")
    if target is None:
        target = limit_shape(alpha)[1].tau if alpha is not None else HEXAGONAL_POINT
    try:
        order = CubicOrder.from_params(FamilyParams(a, b, t))
    except NotTotallyReal as exc:
        rec.flags.append("NotTotallyReal")
        rec.error = f"NotTotallyReal: {exc}"
        return rec
    except ValueError as exc:
        rec.error = f"{type(exc).__name__}: {exc}"
        return rec
    rec.disc = order.disc
    if b == 1 and t >= 1:
        diag = taylor_diagnostics(order, prec)
        rec.delta1, rec.delta2, rec.eps1, rec.eps2 = diag.delta1, diag.delta2, diag.eps1, diag.eps2
        if rec.k is not None:
            rec.lemma_holds = bool(verify_root_bound_lemma(order, rec.k))
    try:
        data = shape_data(order, epsilon, prec)
    except PrecisionError as exc:
        rec.error = f"PrecisionError: {exc}"
        return rec
    rec.regulator = data.regulator
    rec.cusick_ratio = data.certificate.ratio
    rec.cert = data.certificate.status
    if data.reduced is None:
        rec.flags.append("Inconclusive")
        return rec
    rec.tau = data.tau
    rec.reduced = data.reduced.tau
    rec.g = data.reduced.g
    rec.dist_to_limit = quotient_distance(data.reduced.tau, target, data.prec)
    return rec


def _run(tasks, workers):
    if not workers or workers <= 1 or len(tasks) <= 1:
        return [sweep_point(*args, **kw) for args, kw in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(sweep_point, *args, **kw) for args, kw in tasks]
        return [f.result() for f in futures]


def t_sweep_fixed_ab(a, b, t_grid, epsilon=Fraction(1, 10 ** 6),
                     prec=DEFAULT_PRECISION, workers=None):
    """Shapes of f_{a,b,t} along ``t_grid``, with distances to the hexagonal point."""
    FamilyParams(a, b, 0)  # validates the pair
    t_grid = [int(t) for t in t_grid]
    if any(y <= x for x, y in zip(t_grid, t_grid[1:])):
        raise ValueError("t grid must be strictly increasing")
    tasks = [((a, b, t), dict(epsilon=epsilon, prec=prec)) for t in t_grid]
    return _run(tasks, workers)


def alpha_sweep(config, workers=None):
    """One record per (alpha, t), with a_t from the schedule."""
    tasks = []
    for alpha in config.alphas:
        sched = AlphaSchedule(alpha, config.c)
        for t in config.t_grid:
            a = schedule_a(t, sched)
            tasks.append(((a, 1, t), dict(alpha=alpha, epsilon=config.epsilon,
                                         prec=config.precision)))
    for a, b in config.fixed_pairs:
        for t in config.t_grid:
            tasks.append(((a, b, t), dict(epsilon=config.epsilon, prec=config.precision)))
    return _run(tasks, workers)


@dataclass(frozen=True)
class ExponentFit:
    slope: float
    intercept: float
    max_residual: float
    n_points: int
    excluded: tuple = ()


def exponent_fit(points):
    """Least-squares slope of log|value| against log t.

    ``points`` are (t, value) pairs where value is a rational or an
    interval; intervals containing zero are excluded and reported.
    """
    xs, ys, excluded = [], [], []
    for t, value in points:
        if hasattr(value, "contains_zero"):
            if value.contains_zero():
                excluded.append(t)
                continue
            value = value.mid
        if value == 0:
            excluded.append(t)
            continue
        xs.append(log_abs_float(t))
        ys.append(log_abs_float(value))
    if len(xs) < 3:
        raise ValueError("need at least 3 usable points")
    if max(xs) - min(xs) < 10 * math.log(10) - 1e-9:
        raise ValueError("t values must span at least 10 decades")
    x, y = np.array(xs), np.array(ys)
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    return ExponentFit(float(slope), float(intercept), float(np.abs(resid).max()),
                       len(xs), tuple(excluded))


@dataclass(frozen=True)
class CuspRow:
    alpha: Fraction
    alpha_prime: Fraction
    tau: ExactPoint
    reduced: ExactPoint
    g: tuple

    @property
    def im(self):
        return self.reduced.imag


def cusp_escape_table(alphas):
    """Exact limit points along the given exponents."""
    rows = []
    for alpha in alphas:
        alpha = Fraction(alpha)
        tau, red = limit_shape(alpha)
        rows.append(CuspRow(alpha, limit_alpha_prime(alpha), tau, red.tau, red.g))
    return rows


def growth_summary(records):
    """Growth diagnostics for the records of one alpha.

    Returns slopes of log D, log|eps1|, log|eps2| against log t, the fitted
    constants, and R'/log^2 t at the largest t.
    """
    recs = sorted((r for r in records if r.disc), key=lambda r: r.t)
    out = {}
    out["disc"] = exponent_fit([(r.t, Fraction(r.disc)) for r in recs])
    out["eps1"] = exponent_fit([(r.t, r.eps1) for r in recs if r.eps1 is not None])
    out["eps2"] = exponent_fit([(r.t, r.eps2) for r in recs if r.eps2 is not None])
    last = next((r for r in reversed(recs) if r.regulator is not None), None)
    if last is not None:
        out["regulator_over_log2t"] = float(last.regulator.mid) / math.log(last.t) ** 2
    return out
