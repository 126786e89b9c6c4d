"""Exception hierarchy shared by every layer of the package."""


class GenPowError(Exception):
    """Base class for all errors raised by :mod:`genpow`."""


class DimensionMismatch(GenPowError, ValueError):
    pass


class NotHermitian(GenPowError, ValueError):
    pass


class NotPositiveDefinite(GenPowError, ValueError):
    pass


class NotCommuting(GenPowError, ValueError):
    pass


class OutOfConvergenceRegion(GenPowError, ValueError):
    pass


class SpectrumOutsideDomain(GenPowError, ValueError):
    pass


class InvalidSpec(GenPowError, ValueError):
    pass


class NoConvergence(GenPowError, ArithmeticError):
    """An iterative kernel hit its iteration cap before meeting its tolerance."""


#: Errors that mean "the inputs violate a documented precondition".
PRECONDITION_ERRORS = (
    DimensionMismatch,
    NotHermitian,
    NotPositiveDefinite,
    NotCommuting,
    OutOfConvergenceRegion,
    SpectrumOutsideDomain,
)
