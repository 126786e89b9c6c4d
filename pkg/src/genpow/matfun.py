"""
Matrix exponential and logarithm.

Two independent routes exist for each function:

* series routes (:func:`exp_general`, :func:`log_series`) work from the
  power series and accept non-normal input;
* spectral routes (:func:`exp_spectral`, :func:`log_spectral`,
  :func:`apply_spectral`) apply a scalar function to the eigenvalues of a
  Hermitian matrix.

On Hermitian input the two routes must agree, and the test-suite uses each
as the oracle of the other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    NotHermitian,
    NotPositiveDefinite,
    OutOfConvergenceRegion,
    SpectrumOutsideDomain,
)
from .linalg import (
    DEFAULT_TOL,
    CMatrix,
    Tolerances,
    as_cmatrix,
    fro,
    hermitian_eigendecompose,
    is_hermitian,
    operator_norm,
)

__all__ = [
    "FnOnSpectrum",
    "IDENTITY",
    "EXP",
    "LOG",
    "SQRT",
    "RECIPROCAL",
    "real_power",
    "exp_general",
    "exp_spectral",
    "log_series",
    "log_spectral",
    "apply_spectral",
    "LOG_SERIES_RADIUS",
]

#: ``log_series`` refuses inputs with ``||A - I|| > LOG_SERIES_RADIUS``.
LOG_SERIES_RADIUS = 0.95

_MAX_TAYLOR_TERMS = 200
_MAX_MERCATOR_TERMS = 5000


@dataclass(frozen=True)
class FnOnSpectrum:
    """A real function together with the interval on which it is defined.

    ``lo``/``hi`` bound the domain; ``open_lo``/``open_hi`` say whether
    the corresponding endpoint is excluded.
    """

    func: Callable[[np.ndarray], np.ndarray]
    lo: float = -math.inf
    hi: float = math.inf
    open_lo: bool = True
    open_hi: bool = True
    name: str = "f"

    def contains(self, x: float) -> bool:
        above = x > self.lo if self.open_lo else x >= self.lo
        below = x < self.hi if self.open_hi else x <= self.hi
        return above and below

    def __call__(self, x):
        return self.func(x)


IDENTITY = FnOnSpectrum(lambda x: x, name="identity")
EXP = FnOnSpectrum(np.exp, name="exp")
LOG = FnOnSpectrum(np.log, lo=0.0, name="log")
SQRT = FnOnSpectrum(np.sqrt, lo=0.0, open_lo=False, name="sqrt")
RECIPROCAL = FnOnSpectrum(lambda x: 1.0 / x, lo=0.0, name="reciprocal")


def real_power(alpha: float) -> FnOnSpectrum:
    """``x -> x**alpha`` on ``(0, inf)``, or ``[0, inf)`` when ``alpha > 0``."""
    return FnOnSpectrum(
        lambda x: np.power(x, alpha), lo=0.0, open_lo=alpha <= 0, name=f"x**{alpha:g}"
    )


def apply_spectral(f: FnOnSpectrum, h: CMatrix, tol: Tolerances = DEFAULT_TOL) -> CMatrix:
    """``V diag(f(lambda)) V*`` for Hermitian ``h = V diag(lambda) V*``."""
    h = as_cmatrix(h)
    if not is_hermitian(h, tol):
        raise NotHermitian("matrix is not Hermitian")
    dec = hermitian_eigendecompose(h, tol)
    bad = [x for x in dec.eigenvalues if not f.contains(x)]
    if bad:
        raise SpectrumOutsideDomain(
            f"eigenvalue {bad[0]!r} lies outside the domain of {f.name}"
        )
    return dec.reconstruct(f(dec.eigenvalues))


def exp_spectral(h: CMatrix, tol: Tolerances = DEFAULT_TOL) -> CMatrix:
    return apply_spectral(EXP, h, tol)


def log_spectral(a: CMatrix, tol: Tolerances = DEFAULT_TOL) -> CMatrix:
    """Logarithm of a Hermitian positive-definite matrix.

    Raises :class:`NotPositiveDefinite` for non-Hermitian input or when the
    smallest eigenvalue is not above ``tol_psd * max(1, ||A||_F)``.
    """
    a = as_cmatrix(a)
    if not is_hermitian(a, tol):
        raise NotPositiveDefinite("not positive definite: matrix is not Hermitian")
    dec = hermitian_eigendecompose(a, tol)
    if not dec.eigenvalues[0] > tol.tol_psd * max(1.0, fro(a)):
        raise NotPositiveDefinite(
            f"not positive definite: smallest eigenvalue {dec.eigenvalues[0]:.3e}"
        )
    return dec.reconstruct(np.log(dec.eigenvalues))


def exp_general(a: CMatrix, tol: Tolerances = DEFAULT_TOL) -> CMatrix:
    """Exponential of an arbitrary square matrix by scaling and squaring.

    ``A`` is scaled by ``2**-s`` with the smallest ``s`` giving
    ``||A||_F / 2**s <= 1/2``, the Taylor series of the scaled matrix is
    summed until a term drops below ``tol_series`` times the partial sum
    (both in Frobenius norm), and the sum is squared ``s`` times.
    """
    a = as_cmatrix(a)
    n = a.shape[0]
    size = fro(a)
    s = 0
    if size > 0.5:
        s = max(0, math.ceil(math.log2(size / 0.5)))
        while size / 2.0**s > 0.5:
            s += 1
    x = a / 2.0**s

    total = np.eye(n, dtype=np.complex128)
    term = np.eye(n, dtype=np.complex128)
    for k in range(1, _MAX_TAYLOR_TERMS + 1):
        term = term @ x / k
        total += term
        t = fro(term)
        if t == 0.0 or t < tol.tol_series * fro(total):
            break
    for _ in range(s):
        total = total @ total
    return total


def log_series(a: CMatrix, tol: Tolerances = DEFAULT_TOL) -> CMatrix:
    """Mercator series ``sum_{k>=1} (-1)**(k-1) (A - I)**k / k``.

    Only accepted for ``||A - I|| <= 0.95`` in operator norm; closer to the
    boundary of the unit disc the series needs thousands of terms.
    """
    a = as_cmatrix(a)
    n = a.shape[0]
    x = a - np.eye(n)
    radius = operator_norm(x, tol)
    if radius > LOG_SERIES_RADIUS:
        raise OutOfConvergenceRegion(
            f"outside series convergence region: ||A - I|| = {radius:.6g} > {LOG_SERIES_RADIUS}"
        )
    total = np.zeros((n, n), dtype=np.complex128)
    power = np.eye(n, dtype=np.complex128)
    for k in range(1, _MAX_MERCATOR_TERMS + 1):
        power = power @ x
        term = power / k
        if k % 2 == 0:
            total -= term
        else:
            total += term
        t = fro(term)
        if t == 0.0 or t < tol.tol_series * max(1.0, fro(total)):
            break
    return total
