# %% [markdown]
# # The exponential is not operator monotone
#
# ``A >= B`` does not imply ``exp(A) >= exp(B)``.  A random search over
# 2x2 pairs with ``A = B + P`` (``P`` a rank-one positive matrix) finds a
# witness almost immediately.

# %%
import numpy as np

from genpow import exp_spectral
from genpow.harness import hunt_exp_monotonicity_failure

res = hunt_exp_monotonicity_failure(max_trials=10000, seed=1)
print("found after", res.trials_used, "trial(s)")
print("A =\n", np.round(res.A, 4))
print("B =\n", np.round(res.B, 4))

# %%
print("min eig(A - B)         = %.3e" % np.linalg.eigvalsh(res.A - res.B)[0])
d = exp_spectral(res.A) - exp_spectral(res.B)
print("min eig(e^A - e^B)     = %.6f" % np.linalg.eigvalsh(d)[0])

# %% [markdown]
# When ``A`` and ``B`` commute the order is preserved, and the search with
# the commuting generator finds nothing.

# %%
res = hunt_exp_monotonicity_failure(max_trials=500, seed=1, generator="commuting")
print("commuting pairs, found:", res.found)
