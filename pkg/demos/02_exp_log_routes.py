# %% [markdown]
# # Two routes to exp and log
#
# The series routes work on any matrix; the spectral routes diagonalize a
# Hermitian matrix with the built-in Jacobi solver.  On Hermitian input
# they must agree.

# %%
import numpy as np

from genpow import exp_general, exp_spectral, hermitian_eigendecompose, log_series, log_spectral
from genpow.errors import OutOfConvergenceRegion

rng = np.random.default_rng(7)
g = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
H = 0.25 * (g + g.conj().T)

dec = hermitian_eigendecompose(H)
print("eigenvalues:", np.round(dec.eigenvalues, 6))
print("max |eig - numpy eig|:", np.max(np.abs(dec.eigenvalues - np.linalg.eigvalsh(H))))

# %%
gap = np.linalg.norm(exp_general(H) - exp_spectral(H)) / np.linalg.norm(exp_spectral(H))
print("exp: series vs spectral relative gap %.2e" % gap)

# %% [markdown]
# The Mercator series for the logarithm only converges near the identity,
# so it refuses inputs with ``||A - I|| > 0.95``.

# %%
A = np.eye(5) + 0.3 * H / np.linalg.norm(H, 2)
print("log: series vs spectral gap %.2e" % np.linalg.norm(log_series(A) - log_spectral(A)))

try:
    log_series(3.0 * np.eye(2))
except OutOfConvergenceRegion as exc:
    print("refused:", exc)

# %% [markdown]
# Round trips: ``log(exp(H)) = H`` and ``exp(log A) = A``.

# %%
print("log(exp H) - H:", np.linalg.norm(log_spectral(exp_spectral(H)) - H))
print("exp(log A) - A:", np.linalg.norm(exp_spectral(log_spectral(A)) - A))
