# %% [markdown]
# # Scheduled a_t = ceil(c t^alpha): growth rates
#
# For each alpha we build the orders along t = 1e12 ... 1e48 and fit
# power laws in t.  The fits can be set against the rates the
# expansions were supposed to give:
#
# | quantity       | expected       | measured          |
# |----------------|----------------|-------------------|
# | eps1           | t^0            | t^0               |
# | eps2           | t^(1 - 3alpha) | t^(-2 alpha)      |
# | D              | t^(4 + 4alpha) | t^(4 + 2 alpha)   |
# | R' / log^2 t   | 3 alpha        | 1 + 2 alpha       |

# %%
from fractions import Fraction

from cubicshapes import SweepConfig, alpha_sweep
from cubicshapes.sweeps import growth_summary

alphas = [Fraction(1, n) for n in (5, 6, 8, 10)]
grid = [10 ** e for e in range(12, 49, 6)]
records = alpha_sweep(SweepConfig(alphas=alphas, t_grid=grid))

# %%
for alpha in alphas:
    g = growth_summary([r for r in records if r.alpha == alpha])
    print(f"alpha={str(alpha):5}  eps1 {g['eps1'].slope:+.4f}  eps2 {g['eps2'].slope:+.4f} "
          f"(-2a = {float(-2 * alpha):+.4f})  D {g['disc'].slope:.4f} (4+2a = {float(4 + 2 * alpha):.4f})  "
          f"R'/log^2 t {g['regulator_over_log2t']:.4f} (1+2a = {float(1 + 2 * alpha):.4f})")

# %% [markdown]
# Every order on the grid is certified, and the Cusick ratio settles
# near (1 + 2 alpha) / (4 + 2 alpha)^2, which is below 1/8.

# %%
for r in records[:4]:
    print(r.alpha, r.t, r.a, r.cert, float(r.cusick_ratio.hi))
