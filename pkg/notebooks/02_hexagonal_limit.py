# %% [markdown]
# # Fixed pair (a, b) = (2, 1): shapes approach the hexagonal point
#
# With a fixed and t growing, the reduced shapes should drift toward
# 1/2 + i sqrt3/2.  The distance is the hyperbolic distance on the
# modular curve.

# %%
from cubicshapes import t_sweep_fixed_ab

grid = [10 ** e for e in (3, 6, 12, 24, 48)]
records = t_sweep_fixed_ab(2, 1, grid)
for r in records:
    z = r.reduced.as_complex()
    print(f"t=1e{len(str(r.t)) - 1:<3} shape={z.real:.6f}+{z.imag:.6f}i  dist={float(r.dist_to_limit):.6f}")

# %% [markdown]
# Each step of the grid roughly squares t, and the distance roughly
# halves.  That is consistent with a 1/log t rate.

# %%
import numpy as np

logs = np.log([float(r.t) for r in records])
dist = np.array([float(r.dist_to_limit) for r in records])
print("dist * log t:", np.round(dist * logs, 4))

# %% [markdown]
# A mutually cubic pair with b != 1 goes through the same pipeline.

# %%
for r in t_sweep_fixed_ab(2, 7, [10 ** 3, 10 ** 6, 10 ** 12]):
    print(r.t, r.cert, r.reduced.as_complex(), float(r.dist_to_limit))
