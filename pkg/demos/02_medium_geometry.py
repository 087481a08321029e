# %% [markdown]
# # The ramified medium
#
# `N` branches with lengths proportional to `k**(-alpha)` share the total
# length `L`. The cumulative delays `lambda_k` telescope to `L`, and the
# mismatch `eta` with the continuum delay profile decays like
# `N**(-(1 - alpha))`, with the first branch dominating.

# %%
import numpy as np

from fracwave import FractionalOrder, MediumSpec, build_geometry, epsilon_upper_bound, eta_errors

order = FractionalOrder(0.5)
g = build_geometry(MediumSpec(1000, 2.0, order))
print("b_N =", g.b_N)
print("lambda_N - L =", g.lam[-1] - g.L)
print("first five branch lengths:", np.round(g.ell[:5], 6))

# %% [markdown]
# Decay of the worst delay mismatch and the analytic bound.

# %%
for s in (0.1, 0.5, 0.9):
    o = FractionalOrder(s)
    for N in (10, 100, 1000, 10000):
        rep = eta_errors(build_geometry(MediumSpec(N, 1.0, o)))
        print(
            f"s={s:.1f} N={N:>5}  eps={rep.epsilon_N:.4e}  bound={epsilon_upper_bound(N, o):.4e}"
            f"  eps*N^(1-alpha)={rep.epsilon_N * N ** (1 - o.alpha):.4f}"
        )

# %%
rep = eta_errors(build_geometry(MediumSpec(100, 1.0, order)))
print("index of worst mismatch:", int(np.argmax(np.abs(rep.eta))) + 1)
