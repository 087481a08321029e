# %% [markdown]
# # Two routes to the Caputo derivative
#
# `caputo_direct` integrates the first derivative against the weakly singular
# kernel after the substitution `w = (t - tau)**(1 - s)`, which removes the
# singularity. `caputo_ibp` integrates by parts once more and works with the
# second derivative. The two agree up to `scaling_constant(order)`.

# %%
import math

import numpy as np

from fracwave import FractionalOrder, TimeFunction, caputo_direct, caputo_ibp, scaling_constant

# %% [markdown]
# Monomials have a closed form, `p! / Gamma(p + 1 - s) * t**(p - s)`.

# %%
for s in (0.1, 0.5, 0.9):
    order = FractionalOrder(s)
    for p in (1, 2, 3):
        got = caputo_direct(TimeFunction.monomial(p), order, 1.5)
        exact = math.factorial(p) / math.gamma(p + 1 - s) * 1.5 ** (p - s)
        print(f"s={s:.1f} p={p}  direct={got:.15f}  rel.err={abs(got - exact) / exact:.1e}")

# %% [markdown]
# A non-polynomial input. The derivatives are passed explicitly and can be
# checked against finite differences.

# %%
u = TimeFunction(
    lambda t: t**2 + 0.1 * np.sin(t),
    lambda t: 2 * t + 0.1 * np.cos(t),
    lambda t: 2 - 0.1 * np.sin(t),
)
u.check_derivatives(np.linspace(0.1, 2.0, 7))

order = FractionalOrder(0.5)
for t in (0.5, 1.0, 2.0):
    d = caputo_direct(u, order, t)
    i = caputo_ibp(u, order, t)
    print(f"t={t}  C*direct={scaling_constant(order) * d:.15f}  ibp={i:.15f}")
