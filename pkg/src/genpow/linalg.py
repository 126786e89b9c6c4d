"""
Dense complex matrix kernel.

Matrices are plain ``numpy`` arrays of dtype ``complex128`` with shape
``(n, n)``, ``n >= 1``.  Everything downstream (exponentials, logarithms,
generalized powers, the verification harness) is built on the handful of
routines here: arithmetic with dimension checks, a cyclic complex Jacobi
eigensolver for Hermitian matrices, the operator 2-norm, and the order
predicates (Hermitian, positive definite, Loewner order, commutation).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DimensionMismatch, NoConvergence, NotHermitian

CMatrix = np.ndarray
Scalar = Union[complex, float, int]

__all__ = [
    "CMatrix",
    "Tolerances",
    "DEFAULT_TOL",
    "SpectralDecomposition",
    "as_cmatrix",
    "identity",
    "add",
    "mul",
    "scale",
    "adjoint",
    "fro",
    "is_hermitian",
    "hermitian_eigendecompose",
    "operator_norm",
    "loewner_leq",
    "is_positive_definite",
    "commutes",
    "commutator_residual",
]


@dataclass(frozen=True)
class Tolerances:
    """Every numerical threshold used by the package, in one place.

    Relative thresholds are always scaled by ``max(1, size)`` so that the
    zero matrix does not turn them into exact-equality tests.
    """

    tol_herm: float = 1e-10
    tol_psd: float = 1e-9
    tol_commute: float = 1e-9
    tol_recon: float = 1e-10
    tol_series: float = 1e-16
    max_sweeps: int = 64

    def __post_init__(self):
        for name in ("tol_herm", "tol_psd", "tol_commute", "tol_recon", "tol_series"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be positive and finite, got {value!r}")
        if int(self.max_sweeps) != self.max_sweeps or self.max_sweeps < 1:
            raise ValueError(f"max_sweeps must be an integer >= 1, got {self.max_sweeps!r}")


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class SpectralDecomposition:
    """Ascending real eigenvalues and the matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: CMatrix

    def reconstruct(self, values=None) -> CMatrix:
        """Return ``V diag(values) V*``; ``values`` defaults to the eigenvalues."""
        lam = self.eigenvalues if values is None else np.asarray(values)
        v = self.eigenvectors
        return (v * lam) @ v.conj().T


def as_cmatrix(a) -> CMatrix:
    """Coerce ``a`` to a finite, square, non-empty complex128 array."""
    m = np.array(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] < 1:
        raise DimensionMismatch("matrix dimension must be at least 1")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def _same_dim(a: CMatrix, b: CMatrix) -> None:
    if a.shape != b.shape:
        raise DimensionMismatch(f"dimension mismatch: {a.shape} vs {b.shape}")


def identity(n: int) -> CMatrix:
    if n < 1:
        raise DimensionMismatch("matrix dimension must be at least 1")
    return np.eye(n, dtype=np.complex128)


def add(a: CMatrix, b: CMatrix) -> CMatrix:
    a, b = as_cmatrix(a), as_cmatrix(b)
    _same_dim(a, b)
    return a + b


def mul(a: CMatrix, b: CMatrix) -> CMatrix:
    a, b = as_cmatrix(a), as_cmatrix(b)
    _same_dim(a, b)
    return a @ b


def scale(c: Scalar, a: CMatrix) -> CMatrix:
    return complex(c) * as_cmatrix(a)


def adjoint(a: CMatrix) -> CMatrix:
    """Conjugate transpose."""
    return as_cmatrix(a).conj().T.copy()


def fro(a: CMatrix) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(a))


def is_hermitian(a: CMatrix, tol: Tolerances = DEFAULT_TOL) -> bool:
    a = np.asarray(a)
    return fro(a - a.conj().T) <= tol.tol_herm * max(1.0, fro(a))


def _off_norm(w: list) -> float:
    total = 0.0
    for i, row in enumerate(w):
        for j, x in enumerate(row):
            if i != j:
                total += x.real * x.real + x.imag * x.imag
    return math.sqrt(total)


def _rotate(w: list, v: list, p: int, q: int) -> None:
    """Annihilate ``w[p][q]`` in place with one complex Jacobi rotation."""
    apq = w[p][q]
    r = abs(apq)
    phase = apq / r
    theta = (w[q][q].real - w[p][p].real) / (2.0 * r)
    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    # G = [[c, s], [g10, g11]] acting on columns p, q; rows get G*
    g10 = -s * phase.conjugate()
    g11 = c * phase.conjugate()
    for row in w:
        x, y = row[p], row[q]
        row[p] = c * x + g10 * y
        row[q] = s * x + g11 * y
    rp, rq = w[p], w[q]
    h10, h11 = g10.conjugate(), g11.conjugate()
    for k in range(len(rp)):
        x, y = rp[k], rq[k]
        rp[k] = c * x + h10 * y
        rq[k] = s * x + h11 * y
    w[p][q] = w[q][p] = 0j
    w[p][p] = complex(w[p][p].real)
    w[q][q] = complex(w[q][q].real)
    for row in v:
        x, y = row[p], row[q]
        row[p] = c * x + g10 * y
        row[q] = s * x + g11 * y


def hermitian_eigendecompose(a: CMatrix, tol: Tolerances = DEFAULT_TOL) -> SpectralDecomposition:
    """Cyclic Jacobi eigensolver for a Hermitian matrix.

    Each rotation first removes the phase of the pivot ``a[p, q]`` with a
    diagonal unitary and then applies the classical real Jacobi rotation,
    so the combined 2x2 transform annihilates ``a[p, q]`` exactly.  Pivots
    are visited in fixed row-major order, which makes the result a
    deterministic function of the input.

    Raises
    ------
    NotHermitian
        if ``a`` fails :func:`is_hermitian`.
    NoConvergence
        if the off-diagonal Frobenius norm is still above
        ``tol_recon * ||a||_F`` after ``max_sweeps`` sweeps.
    """
    a = as_cmatrix(a)
    if not is_hermitian(a, tol):
        raise NotHermitian("matrix is not Hermitian")
    n = a.shape[0]
    # plain Python lists: per-element numpy overhead dominates at n <= 16
    w = (0.5 * (a + a.conj().T)).tolist()
    v = np.eye(n, dtype=np.complex128).tolist()
    target = tol.tol_recon * fro(a)
    # once below target, keep sweeping only while it still pays off
    polish = 1e-4 * target

    prev = math.inf
    sweeps = 0
    while True:
        off = _off_norm(w)
        if off <= polish or (off <= target and off > 0.25 * prev):
            break
        if sweeps == tol.max_sweeps:
            if off <= target:
                break
            raise NoConvergence(
                f"Jacobi did not converge in {tol.max_sweeps} sweeps "
                f"(off-diagonal norm {off:.3e}, target {target:.3e})"
            )
        prev = off
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                if w[p][q] != 0:
                    _rotate(w, v, p, q)
    lam = np.array([w[i][i].real for i in range(n)])
    order = np.argsort(lam, kind="stable")
    return SpectralDecomposition(lam[order], np.array(v, dtype=np.complex128)[:, order])


def operator_norm(a: CMatrix, tol: Tolerances = DEFAULT_TOL) -> float:
    """Largest singular value, ``sqrt(max eig(A* A))``."""
    a = as_cmatrix(a)
    gram = a.conj().T @ a
    gram = 0.5 * (gram + gram.conj().T)
    top = hermitian_eigendecompose(gram, tol).eigenvalues[-1]
    return math.sqrt(max(top, 0.0))


def loewner_leq(a: CMatrix, b: CMatrix, tol: Tolerances = DEFAULT_TOL) -> bool:
    """``A <= B`` in the Loewner order, i.e. ``B - A`` positive semidefinite."""
    a, b = as_cmatrix(a), as_cmatrix(b)
    _same_dim(a, b)
    for name, m in (("A", a), ("B", b)):
        if not is_hermitian(m, tol):
            raise NotHermitian(f"{name} is not Hermitian")
    d = b - a
    d = 0.5 * (d + d.conj().T)
    lam_min = hermitian_eigendecompose(d, tol).eigenvalues[0]
    return bool(lam_min >= -tol.tol_psd * max(1.0, fro(d)))


def is_positive_definite(a: CMatrix, tol: Tolerances = DEFAULT_TOL) -> bool:
    a = as_cmatrix(a)
    if not is_hermitian(a, tol):
        return False
    lam_min = hermitian_eigendecompose(a, tol).eigenvalues[0]
    return bool(lam_min > tol.tol_psd * max(1.0, fro(a)))


def commutes(a: CMatrix, b: CMatrix, tol: Tolerances = DEFAULT_TOL) -> bool:
    return commutator_residual(a, b) <= tol.tol_commute


def commutator_residual(a: CMatrix, b: CMatrix) -> float:
    """``||AB - BA||_F / max(1, ||A||_F ||B||_F)``."""
    a, b = as_cmatrix(a), as_cmatrix(b)
    _same_dim(a, b)
    return fro(a @ b - b @ a) / max(1.0, fro(a) * fro(b))
