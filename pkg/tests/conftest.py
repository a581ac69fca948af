"""Shared mpmath oracle: roots, embeddings and shapes computed independently."""

from fractions import Fraction
import sys

import mpmath
import pytest


def oracle_roots(p, q, r, a=1, b=1, dps=80):
    """Roots of X^3 + pX^2 + qX + r in the package's embedding order."""
    with mpmath.workdps(dps):
        roots = [mpmath.re(z) for z in mpmath.polyroots([1, p, q, r], maxsteps=500, extraprec=4 * dps)]
        first = min(roots, key=abs)
        rest = sorted((z for z in roots if z is not first), key=lambda z: abs(z - mpmath.mpf(b) / a))
        return [first] + rest


def oracle_shape(p, q, r, a, b=1, dps=80):
    """(emb_theta, emb_linear, R', tau) from mpmath, with tau = w/v in H."""
    with mpmath.workdps(dps):
        th = oracle_roots(p, q, r, a, b, dps)
        e1 = [mpmath.log(abs(x)) for x in th]
        e2 = [mpmath.log(abs(a * x - b)) for x in th]
        reg = abs(e1[0] * e2[1] - e1[1] * e2[0])
        s3 = mpmath.sqrt(3)

        def plane(v):
            return mpmath.mpc(-v[0] - v[1] / 2, -s3 / 2 * v[1])

        tau = plane(e2) / plane(e1)
        if mpmath.im(tau) < 0:
            tau = plane(e1) / plane(e2)
        return e1, e2, reg, tau


def oracle_reduce(tau):
    """Textbook reduction in mpmath (no special boundary handling)."""
    for _ in range(1000):
        tau = tau - mpmath.floor(mpmath.re(tau) + mpmath.mpf(1) / 2)
        if abs(tau) < 1:
            tau = -1 / tau
        else:
            return tau
    raise RuntimeError


@pytest.fixture
def a2t10():
    from cubicshapes import CubicOrder
    return CubicOrder.family(2, 10)


def frac_to_mpf(x):
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
