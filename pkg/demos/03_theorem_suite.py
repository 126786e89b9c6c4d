# %% [markdown]
# # Checking identities on random instances
#
# Each verifier draws seeded random matrices, checks one statement about
# generalized powers, and returns a tally.  Nothing here is a proof; a
# failing trial reports the seed that reproduces it.

# %%
from genpow.harness import GATING, REGISTRY

for name in GATING:
    report = REGISTRY[name](trials=50, seed=0xC0FFEE)
    print(f"{name:<14} passes={report.passes:3d} skips={report.skips} "
          f"failures={report.failures} worst={report.worst_residual:.1e}")

# %% [markdown]
# The exploratory probe asks whether ``A <= B`` implies ``A^T <= B^T``
# when ``T`` does not commute with ``A`` and ``B``.  It is evidence only:
# it never decides the overall verdict.  In the ``general`` channel
# ``A^T`` is usually not Hermitian, so the order is undefined and the
# trial counts as a violation.

# %%
from genpow.harness import verify_heinz_noncommuting_probe

for channel in ("classical", "commuting", "square", "general"):
    report = verify_heinz_noncommuting_probe(trials=50, seed=11, channels=(channel,))
    print(f"{channel:<10} violations={report.failures}/{report.trials}")

# %% [markdown]
# The same suite from the shell:
#
# ```
# genpow verify all --trials 200 --seed 0xC0FFEE
# ```
