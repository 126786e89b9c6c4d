# %% [markdown]
# # A first generalized power
#
# For a positive-definite base ``A`` and any square exponent ``B`` the
# generalized power is ``A^B = exp(B log A)``.  Here ``A = diag(1, 2)`` and
# ``B`` is the nilpotent shift, so ``B log A`` is nilpotent too and the
# exponential stops after the linear term.

# %%
import numpy as np

from genpow import gpow, log_spectral, norm_equality_check

A = np.diag([1.0, 2.0])
B = np.array([[0.0, 1.0], [0.0, 0.0]])

res = gpow(A, B)
print("B log A =\n", res.blogA.real)
print("A^B =\n", res.value.real)
print("ln 2 =", np.log(2.0))

# %% [markdown]
# ``A`` and ``B`` do not commute, and the result is not Hermitian.  The
# norm of the power is still controlled by ``exp(||B log A||) = 2``.

# %%
check = norm_equality_check(A, B)
print("commuting:", res.commuting)
print("||A^B|| = %.6f  <=  exp(||B log A||) = %.6f" % (check.lhs, check.rhs))

# %% [markdown]
# The order of the factors matters: ``(log A) B`` is a different matrix
# (here it vanishes, so ``exp((log A) B)`` would be the identity).

# %%
print("(log A) B =\n", (log_spectral(A) @ B).real)
