"""
Acceptance criteria A1-A9.

Each test prints one ``A<n> PASS`` or ``A<n> FAIL`` line (collected again
in the pytest terminal summary).  Run directly with
``python tests/test_acceptance.py`` to get just the nine lines.
"""

from fractions import Fraction
import math
import random
import sys

import pytest

from cubicshapes.errors import InconclusiveCertificate
from cubicshapes.exactnum import DyadicInterval
from cubicshapes.modular import (ExactPoint, in_fundamental_domain, mobius,
                                 reduce_sl2, UpperHalfPoint)
from cubicshapes.orders import (AlphaSchedule, CubicOrder, build_ft, choose_k,
                                irreducible_witness, lemma_threshold,
                                schedule_a, unit_norm_check,
                                verify_root_bound_lemma)
from cubicshapes.polycubic import discriminant, refine_root
from cubicshapes.regshape import (CertStatus, combine_embeddings, limit_shape,
                                  shape_data, shape_from_embeddings,
                                  shape_of_order, shape_via_gram_oracle)
from cubicshapes.sweeps import (SweepConfig, alpha_sweep, cusp_escape_table,
                                exponent_fit, t_sweep_fixed_ab)

GRID_ALPHAS = [Fraction(1, n) for n in (5, 6, 8, 10)]
GRID_T = [10 ** 6, 10 ** 12, 10 ** 24, 10 ** 48]
FIT_T = [10 ** e for e in range(12, 49, 6)]
C = Fraction(9, 10)

RESULTS = []


def verdict(name, ok, detail):
    line = f"{name} {'PASS' if ok else 'FAIL'}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def grid_records():
    return alpha_sweep(SweepConfig(alphas=GRID_ALPHAS, c=C, t_grid=GRID_T))


@pytest.fixture(scope="module")
def fit_records():
    recs = alpha_sweep(SweepConfig(alphas=GRID_ALPHAS, c=C, t_grid=FIT_T))
    return {alpha: [r for r in recs if r.alpha == alpha] for alpha in GRID_ALPHAS}


def test_a1_exact_algebra():
    rng = random.Random(1)
    bad = []
    for _ in range(200):
        a, t = rng.randrange(2, 21), rng.randrange(1, 10 ** 6 + 1)
        f = build_ft(a, t)
        try:
            ok, f1, fm1 = irreducible_witness(f, a, t)
        except AssertionError as exc:
            bad.append(f"witness({a},{t}): {exc}")
            continue
        if not ok or f1 != a ** 5 - a ** 4 - 2 * a ** 2 + a + t * (a - 1) + 2 \
                or fm1 != a ** 5 + a ** 4 - 2 * a ** 2 - a + t * (a + 1):
            bad.append(f"witness({a},{t})")
        order = CubicOrder.family(a, t)
        n1, n2 = unit_norm_check(order)
        if abs(n1) != 1 or abs(n2) != 1:
            bad.append(f"norms({a},{t}) = {n1}, {n2}")
        roots = [DyadicInterval(*refine_root(f, e, Fraction(1, 2 ** 80) * max(1, abs(e[0]))), prec=200)
                 for e in order.roots]
        vdm = ((roots[0] - roots[1]) * (roots[0] - roots[2]) * (roots[1] - roots[2])).square()
        if discriminant(f) not in vdm:
            bad.append(f"disc({a},{t})")
    verdict("A1", not bad, f"200 members, {len(bad)} mismatches {bad[:3]}")


def test_a2_cusick_certification(grid_records):
    failures = [(r.alpha, r.t) for r in grid_records
                if not (r.cert is CertStatus.CERTIFIED and r.cusick_ratio.hi < Fraction(1, 8))]
    worst = max(float(r.cusick_ratio.hi) for r in grid_records if r.cusick_ratio is not None)
    (worked,) = t_sweep_fixed_ab(2, 1, [10])
    ratio = float(worked.cusick_ratio.hi)
    ok = not failures and worked.cert is CertStatus.CERTIFIED and abs(ratio - 0.091) <= 0.005
    verdict("A2", ok, f"{len(grid_records)} grid orders, failures {failures}, max ratio {worst:.4f}; "
                      f"a=2,t=10 ratio {ratio:.4f}")


def test_a3_eps_exponents(fit_records):
    parts, ok = [], True
    for alpha, recs in fit_records.items():
        s1 = exponent_fit([(r.t, r.eps1) for r in recs]).slope
        s2 = exponent_fit([(r.t, r.eps2) for r in recs]).slope
        want2 = float(1 - 3 * alpha)
        ok &= abs(s1) <= 0.05 and abs(s2 - want2) <= 0.05
        parts.append(f"alpha={alpha}: eps1 {s1:+.4f} (want 0), eps2 {s2:+.4f} (want {want2:+.4f})")
    verdict("A3", ok, "; ".join(parts))


def test_a4_growth_rates(fit_records):
    parts, ok = [], True
    for alpha, recs in fit_records.items():
        sd = exponent_fit([(r.t, Fraction(r.disc)) for r in recs]).slope
        last = recs[-1]
        rr = float(last.regulator.mid) / math.log(last.t) ** 2
        want_d, want_r = float(4 * (1 + alpha)), float(3 * alpha)
        ok &= abs(sd - want_d) <= 0.1 and abs(rr - want_r) <= 0.25 * want_r
        parts.append(f"alpha={alpha}: D slope {sd:.4f} (want {want_d:.4f}), "
                     f"R'/log^2 t {rr:.4f} (want {want_r:.4f})")
    verdict("A4", ok, "; ".join(parts))


def test_a5_limit_curve_exact():
    rows = cusp_escape_table([Fraction(1, n) for n in (5, 6, 8, 10, 20, 100)])
    by_alpha = {r.alpha: r.reduced for r in rows}
    exact = (by_alpha[Fraction(1, 6)] == ExactPoint(Fraction(-1, 3), 1)
             and by_alpha[Fraction(1, 10)] == ExactPoint(0, Fraction(5, 3))
             and by_alpha[Fraction(1, 100)] == ExactPoint(0, Fraction(50, 3)))
    ims = [r.reduced.s for r in rows]
    increasing = all(x < y for x, y in zip(ims, ims[1:]))
    big = 3 * by_alpha[Fraction(1, 100)].s ** 2 > 100  # Im > 10 exactly
    verdict("A5", exact and increasing and big,
            f"exact points {exact}, Im increasing {increasing}, Im(1/100) = 50sqrt3/3 > 10 {big}")


def test_a6_convergence_to_limit():
    alpha = Fraction(1, 6)
    recs = alpha_sweep(SweepConfig(alphas=[alpha], c=C, t_grid=[10 ** 12, 10 ** 24, 10 ** 48]))
    d = [float(r.dist_to_limit.mid) for r in recs]
    monotone = all(x > y for x, y in zip(d, d[1:]))
    factor = d[0] / d[-1]
    verdict("A6", monotone and factor >= 2,
            f"distances {[round(x, 5) for x in d]}, monotone {monotone}, first/last {factor:.4f} (want >= 2)")


def test_a7_hexagonal_limit():
    recs = t_sweep_fixed_ab(2, 1, [10 ** 3, 10 ** 6, 10 ** 12, 10 ** 24])
    d = [float(r.dist_to_limit.mid) for r in recs]
    ok = all(r.ok for r in recs) and all(x > y for x, y in zip(d, d[1:]))
    verdict("A7", ok, f"distances to 1/2+i sqrt3/2: {[round(x, 5) for x in d]}")


def test_a8_reduction_and_oracles():
    rng = random.Random(8)
    bad = 0
    for _ in range(1000):
        x = Fraction(rng.randrange(-10 ** 6, 10 ** 6), rng.randrange(1, 10 ** 4))
        y = Fraction(rng.randrange(1, 10 ** 6), 10 ** rng.randrange(0, 8))
        tau = UpperHalfPoint.from_rationals(x, y, 200)
        red = reduce_sl2(tau)
        a, b, c, dd = red.g
        if not (a * dd - b * c == 1 and in_fundamental_domain(red.tau) is True
                and mobius(red.g, tau).overlaps(red.tau)):
            bad += 1
    overlaps, tried = 0, 0
    orders_rng = random.Random(50)
    while overlaps < 50 and tried < 200:
        tried += 1
        order = CubicOrder.family(orders_rng.randrange(2, 40), orders_rng.randrange(10 ** 6, 10 ** 20))
        try:
            planar = shape_of_order(order, Fraction(1, 10 ** 8))
        except InconclusiveCertificate:
            continue
        gram = shape_via_gram_oracle(order, Fraction(1, 10 ** 8))
        if planar.tau.overlaps(gram.tau):
            overlaps += 1
        else:
            bad += 1
    data = shape_data(CubicOrder.family(2, 10))
    e1, e2 = data.emb_theta, data.emb_linear
    invariant = (shape_from_embeddings(e1.scaled(7), e2.scaled(7)).g == data.reduced.g
                 and shape_from_embeddings(e1, combine_embeddings(e1, e2, 1, 1)).tau.overlaps(data.reduced.tau))
    verdict("A8", bad == 0 and overlaps == 50 and invariant,
            f"1000 random tau, {bad} failures; {overlaps}/50 oracle overlaps; invariance {invariant}")


def test_a9_root_bound_lemma(grid_records):
    large = [r for r in grid_records if r.t >= 10 ** 12]
    failing = [(r.alpha, r.t) for r in large if not r.lemma_holds]
    small = [(r.alpha, r.t, r.a) for r in grid_records if r.t < 10 ** 12 and not r.lemma_holds]
    notes = []
    for alpha, t, a in small:
        k = choose_k(alpha)
        sched = AlphaSchedule(alpha, C)
        ts = [10 ** e for e in range(6, 13)]
        t_of_a = {schedule_a(tt, sched): tt for tt in ts}
        notes.append(f"alpha={alpha} t={t} a={a} fails; empirical A' ~ {lemma_threshold(k, list(t_of_a), t_of_a.get)}")
    verdict("A9", not failing, f"{len(large)} points with t >= 1e12, failures {failing}; small-t: {notes or 'none'}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
