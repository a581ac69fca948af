# %% [markdown]
# # The limit curve and where the shapes really go
#
# The closed form with alpha' = (1 + alpha/2) / (3 alpha) gives exact
# points in Q(sqrt3) that run up the cusp as alpha -> 0.

# %%
from fractions import Fraction

from cubicshapes import cusp_escape_table, limit_shape, SweepConfig, alpha_sweep
from cubicshapes.modular import quotient_distance
from cubicshapes.report import emit_svg

alphas = [Fraction(1, n) for n in (5, 6, 8, 10, 20, 100)]
for row in cusp_escape_table(alphas):
    print(f"alpha={str(row.alpha):6} alpha'={str(row.alpha_prime):6} reduced = {row.reduced}  Im = {row.im:.4f}")

# %% [markdown]
# The computed shapes for alpha = 1/6 barely move toward -1/3 + i sqrt3.
# With eps2 decaying like t^(-2 alpha) the rescaled basis tends to
# (1 + alpha rho, (1 + 2 alpha) rho), and that limit point sits on the
# arc |tau - 1| = 1.

# %%
alpha = Fraction(1, 6)
_, closed_point = limit_shape(alpha)
_, measured_point = limit_shape(alpha, eps2_exponent=-2 * alpha)
print("closed-form limit:", closed_point.tau, " corrected limit:", measured_point.tau)

recs = alpha_sweep(SweepConfig(alphas=[alpha], t_grid=[10 ** e for e in (12, 24, 48, 96)]))
for r in recs:
    to_closed = float(r.dist_to_limit)
    to_corrected = float(quotient_distance(r.reduced, measured_point.tau))
    print(f"t=1e{len(str(r.t)) - 1:<3} to closed form {to_closed:.5f}   to corrected {to_corrected:.5f}")

# %%
svg = emit_svg(recs, [row.reduced for row in cusp_escape_table(alphas)], "limit_curve.svg")
print(len(svg), "bytes written to limit_curve.svg")
