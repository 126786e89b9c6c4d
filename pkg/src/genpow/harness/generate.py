"""
Seeded random matrix instances.

Every random draw flows from a ``numpy.random.Generator`` (PCG64) seeded
with a 64-bit integer.  Trial ``i`` of a run with master seed ``s`` uses
the seed :func:`trial_seed` ``(s, i)``, so trials are independent of each
other and of execution order, and any single trial can be replayed from
the seed a report prints.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Sequence, Union

import numpy as np

from ..errors import InvalidSpec
from ..linalg import CMatrix

__all__ = [
    "Kind",
    "MatrixGenSpec",
    "gen",
    "trial_seed",
    "rng_for",
    "complex_gaussian",
    "random_unitary",
    "random_hermitian",
    "random_skew",
    "from_basis",
    "random_pd",
    "commuting_family",
    "scale_to_norm",
]

MAX_SEED = 2**64 - 1


class Kind(enum.Enum):
    HERMITIAN = "hermitian"
    POSITIVE_DEFINITE = "positive_definite"
    COMMUTING_FAMILY = "commuting_family"
    SKEW_ADJOINT = "skew_adjoint"
    GENERAL = "general"


@dataclass(frozen=True)
class MatrixGenSpec:
    """Recipe for one random instance.

    ``spectrum_lo``/``spectrum_hi`` bound the eigenvalues drawn for the
    ``positive_definite`` and ``commuting_family`` kinds; ``family_size``
    is the number of matrices in a commuting family.
    """

    dim: int
    seed: int
    kind: Kind = Kind.HERMITIAN
    spectrum_lo: float = 0.1
    spectrum_hi: float = 10.0
    family_size: int = 2

    def __post_init__(self):
        kind = Kind(self.kind)
        object.__setattr__(self, "kind", kind)
        if not 2 <= self.dim <= 8:
            raise InvalidSpec(f"dim must lie in [2, 8], got {self.dim}")
        if not 0 <= self.seed <= MAX_SEED:
            raise InvalidSpec(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if not self.spectrum_lo < self.spectrum_hi:
            raise InvalidSpec("spectrum_lo must be below spectrum_hi")
        if kind is Kind.POSITIVE_DEFINITE and self.spectrum_lo <= 0:
            raise InvalidSpec("positive_definite needs spectrum_lo > 0")
        if kind is Kind.COMMUTING_FAMILY and self.family_size < 1:
            raise InvalidSpec("family_size must be at least 1")


def trial_seed(master: int, index: int) -> int:
    """Derive the 64-bit seed of trial ``index`` from a master seed."""
    ss = np.random.SeedSequence(int(master), spawn_key=(int(index),))
    return int(ss.generate_state(1, np.uint64)[0])


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(int(seed))


def complex_gaussian(rng: np.random.Generator, n: int) -> CMatrix:
    """Entries with independent standard normal real and imaginary parts, over sqrt(2)."""
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)


def random_unitary(rng: np.random.Generator, n: int) -> CMatrix:
    q, r = np.linalg.qr(complex_gaussian(rng, n))
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_hermitian(rng: np.random.Generator, n: int) -> CMatrix:
    g = complex_gaussian(rng, n)
    return 0.5 * (g + g.conj().T)


def random_skew(rng: np.random.Generator, n: int) -> CMatrix:
    g = complex_gaussian(rng, n)
    return 0.5 * (g - g.conj().T)


def from_basis(v: CMatrix, values) -> CMatrix:
    """``V diag(values) V*``; normal for any complex ``values``."""
    return (v * np.asarray(values)) @ v.conj().T


def random_pd(rng: np.random.Generator, n: int, lo: float = 0.1, hi: float = 10.0) -> CMatrix:
    return from_basis(random_unitary(rng, n), rng.uniform(lo, hi, n))


def commuting_family(
    rng: np.random.Generator, n: int, k: int, lo: float = 0.1, hi: float = 10.0
) -> List[CMatrix]:
    """``k`` Hermitian matrices sharing one random orthonormal eigenbasis."""
    v = random_unitary(rng, n)
    return [from_basis(v, rng.uniform(lo, hi, n)) for _ in range(k)]


def scale_to_norm(m: CMatrix, target: float) -> CMatrix:
    """Rescale ``m`` to operator norm ``target`` (zero stays zero)."""
    size = np.linalg.norm(m, 2)
    return m if size == 0 else m * (target / size)


def gen(spec: MatrixGenSpec) -> Union[CMatrix, List[CMatrix]]:
    """Build the instance described by ``spec``; a list for commuting families."""
    rng = rng_for(spec.seed)
    n = spec.dim
    if spec.kind is Kind.HERMITIAN:
        return random_hermitian(rng, n)
    if spec.kind is Kind.POSITIVE_DEFINITE:
        return random_pd(rng, n, spec.spectrum_lo, spec.spectrum_hi)
    if spec.kind is Kind.COMMUTING_FAMILY:
        return commuting_family(rng, n, spec.family_size, spec.spectrum_lo, spec.spectrum_hi)
    if spec.kind is Kind.SKEW_ADJOINT:
        return random_skew(rng, n)
    return complex_gaussian(rng, n)


def eigenspace_sizes(rng: np.random.Generator, n: int) -> Sequence[int]:
    """Random composition of ``n`` into block sizes (eigenspace dimensions)."""
    cuts = sorted(rng.choice(np.arange(1, n), size=rng.integers(0, n), replace=False))
    edges = [0, *cuts, n]
    return [b - a for a, b in zip(edges, edges[1:])]
