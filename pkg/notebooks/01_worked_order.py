# %% [markdown]
# # One order, end to end
#
# The order Z[theta] for a = 2, t = 10.  theta is a root of
# X^3 + 44X^2 - 24X + 1, and both theta and 2*theta - 1 are units.
# We isolate the roots, take log embeddings, certify that the pair
# is fundamental, and reduce the shape of the unit lattice.

# %%
from fractions import Fraction

from cubicshapes import CubicOrder, shape_data, taylor_diagnostics, unit_norm_check
from cubicshapes.orders import irreducible_witness

order = CubicOrder.family(2, 10)
print(order.poly, "  disc =", order.disc)
print("irreducible, f(1), f(-1):", irreducible_witness(order.poly, 2, 10))
print("norms of theta and 2 theta - 1:", unit_norm_check(order))

# %% [markdown]
# Root enclosures come from a sign table; the order of the conjugates puts
# the root near 0 first and the one near 1/2 second.

# %%
for i, (lo, hi) in enumerate(order.conjugates(), 1):
    print(f"theta^({i}) in [{float(lo):.6f}, {float(hi):.6f}]")

# %%
data = shape_data(order, epsilon=Fraction(1, 10 ** 12))
print("log |theta^(i)|      :", [round(float(c), 5) for c in data.emb_theta])
print("log |2 theta^(i) - 1|:", [round(float(c), 5) for c in data.emb_linear])
print("R' =", float(data.regulator))
print("certificate:", data.certificate.status, " ratio <=", float(data.certificate.ratio_hi))

# %% [markdown]
# The ratio R' / log^2(D/4) is below 1/8, so the two units generate the
# full unit group.  Now the shape itself.

# %%
print("tau     =", data.tau.as_complex())
print("reduced =", data.reduced.tau.as_complex(), " g =", data.reduced.g)
print("width of the reduced enclosure:", float(data.reduced.tau.width()))

# %%
d = taylor_diagnostics(order)
print("eps1 = t theta1       :", float(d.eps1))
print("eps2 = t (a theta2 - 1):", float(d.eps2))
