"""Random search for Hermitian ``A >= B`` with ``e^A`` not above ``e^B``."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..linalg import DEFAULT_TOL, CMatrix, Tolerances, commutes, hermitian_eigendecompose
from ..matfun import exp_spectral
from .generate import complex_gaussian, from_basis, random_hermitian, rng_for, scale_to_norm, trial_seed

__all__ = ["HuntResult", "hunt_exp_monotonicity_failure", "exp_order_gap", "WITNESS_THRESHOLD"]

WITNESS_THRESHOLD = -1e-6
GENERATORS = ("rank-one", "commuting")


@dataclass(frozen=True)
class HuntResult:
    found: bool
    A: Optional[CMatrix]
    B: Optional[CMatrix]
    witness_eigenvalue: float
    trials_used: int
    trial_seed: Optional[int] = None


def exp_order_gap(a: CMatrix, b: CMatrix, tol: Tolerances = DEFAULT_TOL) -> float:
    """Smallest eigenvalue of ``e^A - e^B``."""
    d = exp_spectral(a, tol) - exp_spectral(b, tol)
    return float(hermitian_eigendecompose(0.5 * (d + d.conj().T), tol).eigenvalues[0])


def _candidate(rng: np.random.Generator, generator: str):
    b = scale_to_norm(random_hermitian(rng, 2), rng.uniform(0.5, 3.0))
    if generator == "commuting":
        w, v = np.linalg.eigh(b)
        p = from_basis(v, [rng.uniform(0.0, 3.0), 0.0])
    else:
        x = complex_gaussian(rng, 2)[:, 0]
        x *= np.sqrt(rng.uniform(0.5, 3.0)) / np.linalg.norm(x)
        p = np.outer(x, x.conj())
    return b + p, b


def hunt_exp_monotonicity_failure(
    max_trials: int = 10000,
    seed: int = 1,
    generator: str = "rank-one",
    tol: Tolerances = DEFAULT_TOL,
) -> HuntResult:
    """Search 2x2 pairs ``A = B + P`` (``P >= 0``) for ``min eig(e^A - e^B) < -1e-6``.

    With the default ``rank-one`` generator ``P = x x*`` for a random
    vector ``x``, so ``A`` and ``B`` generally do not commute.  The
    ``commuting`` generator builds ``P`` in the eigenbasis of ``B``;
    commuting pairs are skipped, since exponentiation is monotone on them,
    so that generator never produces a witness.
    """
    if generator not in GENERATORS:
        raise ValueError(f"unknown generator {generator!r}; expected one of {GENERATORS}")
    best = np.inf
    for i in range(max_trials):
        ts = trial_seed(seed, i)
        a, b = _candidate(rng_for(ts), generator)
        if commutes(a, b, tol):
            continue
        gap = exp_order_gap(a, b, tol)
        best = min(best, gap)
        if gap < WITNESS_THRESHOLD:
            return HuntResult(True, a, b, gap, i + 1, ts)
    return HuntResult(False, None, None, float(best), max_trials)
