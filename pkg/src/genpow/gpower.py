"""
Generalized powers ``A^B = exp(B log A)``.

``A`` must be Hermitian positive definite; ``B`` is any square matrix of
the same size.  The exponent is always the product ``B @ log(A)`` in that
order.  Swapping the factors gives a different matrix whenever ``A`` and
``B`` do not commute.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DimensionMismatch, NotCommuting, NotHermitian, NotPositiveDefinite
from .linalg import (
    DEFAULT_TOL,
    CMatrix,
    Tolerances,
    as_cmatrix,
    commutes,
    fro,
    is_hermitian,
    operator_norm,
)
from .matfun import exp_general, log_spectral

__all__ = ["GPowResult", "NormCheck", "gpow", "is_root", "log_gpow", "norm_equality_check"]

_REL = 1e-8


@dataclass(frozen=True)
class GPowResult:
    value: CMatrix
    blogA: CMatrix
    norm_bound: float
    commuting: bool


@dataclass(frozen=True)
class NormCheck:
    bound_holds: bool
    equality_holds: bool
    lhs: float
    rhs: float


def gpow(a: CMatrix, b: CMatrix, tol: Tolerances = DEFAULT_TOL) -> GPowResult:
    """Compute ``A^B = exp(B log A)`` together with its diagnostics.

    Parameters
    ----------
    a : (n, n) array_like
        Hermitian positive-definite base.
    b : (n, n) array_like
        Arbitrary exponent.

    Returns
    -------
    GPowResult
        ``value`` is ``A^B``; ``blogA`` is the exponent ``B log A``;
        ``norm_bound`` is ``exp(||B log A||)``, an upper bound for
        ``||A^B||``; ``commuting`` records whether ``AB = BA`` held at
        ``tol.tol_commute``.
    """
    a, b = as_cmatrix(a), as_cmatrix(b)
    if a.shape != b.shape:
        raise DimensionMismatch(f"dimension mismatch: {a.shape} vs {b.shape}")
    blog = b @ log_spectral(a, tol)
    return GPowResult(
        value=exp_general(blog, tol),
        blogA=blog,
        norm_bound=math.exp(operator_norm(blog, tol)),
        commuting=commutes(a, b, tol),
    )


def is_root(a: CMatrix, b: CMatrix, t: CMatrix, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff ``A`` is a root of order ``B`` of ``T``, i.e. ``A^B = T``."""
    t = as_cmatrix(t)
    value = gpow(a, b, tol).value
    if value.shape != t.shape:
        raise DimensionMismatch(f"dimension mismatch: {value.shape} vs {t.shape}")
    return fro(value - t) <= _REL * max(1.0, fro(t))


def log_gpow(a: CMatrix, b: CMatrix, tol: Tolerances = DEFAULT_TOL) -> CMatrix:
    """``log(A^B)``, which equals ``B log A`` when ``A`` and ``B`` commute.

    Raises :class:`NotCommuting` if ``AB != BA`` and :class:`NotHermitian`
    if ``B log A`` is not Hermitian (``B`` commutes with ``A`` but is not
    itself Hermitian).
    """
    a, b = as_cmatrix(a), as_cmatrix(b)
    result = gpow(a, b, tol)
    if not result.commuting:
        raise NotCommuting("A and B do not commute")
    if not is_hermitian(result.blogA, tol):
        raise NotHermitian("B log A is not Hermitian")
    value = result.value
    try:
        return log_spectral(0.5 * (value + value.conj().T), tol)
    except NotPositiveDefinite as exc:
        raise NotPositiveDefinite(
            f"not positive definite: A^B should be positive definite here ({exc})"
        ) from exc


def norm_equality_check(a: CMatrix, b: CMatrix, tol: Tolerances = DEFAULT_TOL) -> NormCheck:
    """Compare ``||A^B||`` with ``exp(||B log A||)``.

    ``bound_holds`` is the inequality ``||A^B|| <= exp(||B log A||)`` (up to
    a relative slack of 1e-8), which holds for every ``B``.
    ``equality_holds`` is reported unconditionally; whether equality is
    expected depends on hypotheses the caller checks.  Equality requires
    ``B log A`` to be positive semidefinite, which holds when ``A`` and
    ``B`` commute, ``B >= 0`` and ``A >= I``.
    """
    result = gpow(a, b, tol)
    lhs = operator_norm(result.value, tol)
    rhs = result.norm_bound
    return NormCheck(
        bound_holds=lhs <= rhs * (1.0 + _REL),
        equality_holds=abs(lhs - rhs) <= _REL * rhs,
        lhs=lhs,
        rhs=rhs,
    )
