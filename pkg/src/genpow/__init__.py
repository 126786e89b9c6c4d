"""
genpow: generalized matrix powers ``A^B = exp(B log A)``.

``A`` is a Hermitian positive-definite matrix and ``B`` any square matrix
of the same size.  The package provides the dense complex kernel
(:mod:`genpow.linalg`), exponentials and logarithms (:mod:`genpow.matfun`),
the power itself (:mod:`genpow.gpower`), randomized theorem verifiers
(:mod:`genpow.harness`) and a command-line tool (:mod:`genpow.cli`).
"""
from .errors import (
    DimensionMismatch,
    GenPowError,
    InvalidSpec,
    NoConvergence,
    NotCommuting,
    NotHermitian,
    NotPositiveDefinite,
    OutOfConvergenceRegion,
    SpectrumOutsideDomain,
)
from .gpower import GPowResult, NormCheck, gpow, is_root, log_gpow, norm_equality_check
from .linalg import (
    DEFAULT_TOL,
    SpectralDecomposition,
    Tolerances,
    add,
    adjoint,
    commutes,
    hermitian_eigendecompose,
    identity,
    is_hermitian,
    is_positive_definite,
    loewner_leq,
    mul,
    operator_norm,
    scale,
)
from .matfun import (
    FnOnSpectrum,
    apply_spectral,
    exp_general,
    exp_spectral,
    log_series,
    log_spectral,
)

__version__ = "0.1.0"
