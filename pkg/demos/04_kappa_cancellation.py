# %% [markdown]
# # Choosing the diffusion coefficient
#
# The continuum profile satisfies `D^s u = kappa c^s L^(2-s) u_xx` at
# `(L, T)` when `kappa` is picked from the slope and curvature of the initial
# parabola. The scaled residual is free of `L` and `c`, vanishes for the pure
# parabola and grows linearly with the perturbation amplitude `mu`.

# %%
from fracwave import FractionalOrder, ScaleParams, WaveProfile, kappa, residual_general, scaled_residual_at_LT

for s in (0.25, 0.5, 0.75):
    order = FractionalOrder(s)
    k = kappa(order, 10.0, 1.0)
    rep = scaled_residual_at_LT(WaveProfile(0.0, 10.0, 1.0, 0.0), order)
    print(
        f"s={s}  kappa={k:.6f}  boundary={rep.term_boundary:+.6f}"
        f"  double={rep.term_double:+.6f}  diffusion={rep.term_diffusion:+.6f}  total={rep.total:+.1e}"
    )

# %% [markdown]
# Adding a small `mu * sin` perturbation to the parabola.

# %%
order = FractionalOrder(0.5)
for mu in (0.0, 0.01, 0.02, 0.04):
    total = scaled_residual_at_LT(WaveProfile(0.0, 10.0, 1.0, mu), order).total
    print(f"mu={mu:.2f}  total={total:+.6e}")

# %% [markdown]
# Rescaling `L` and `c` by the same factor leaves `T` and the scaled
# residual unchanged.

# %%
p = WaveProfile(0.0, 10.0, 1.0, 0.03)
for sigma in (0.5, 1.0, 2.0, 10.0):
    sc = ScaleParams(sigma, sigma * 0.8, order)
    print(f"sigma={sigma:>4}  T^s Lu(L, T) = {sc.T ** order.s * residual_general(p, order, None, sc, sc.L, sc.T):+.15f}")
