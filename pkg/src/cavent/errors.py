"""Exception types shared across the package."""


class CaventError(Exception):
    """Base class for all cavent errors."""


class ParameterError(CaventError):
    """Invalid, unsupported, or infeasible input parameters (CLI exit code 1)."""


class NumericsError(CaventError):
    """A numerical guarantee could not be met: normalization drift, a spectrum
    that should be real but is not, an eigenvalue too negative to be roundoff,
    or an unattainable truncation tolerance (CLI exit code 2)."""
