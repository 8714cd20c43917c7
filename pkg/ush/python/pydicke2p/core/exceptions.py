"""
Exceptions raised by the two-photon Dicke toolkit.

Report-style operations (validation, convergence scans, Table I comparisons)
never raise for the conditions they report; everything else raises one of the
classes below.
"""


class Dicke2pError(Exception):
    """Base class for all computational errors of the package."""


class DomainError(Dicke2pError):
    """Parameters or order parameter outside the domain where a formula is defined."""


class CollapseError(DomainError):
    """Two-photon coupling at or beyond the spectral collapse g = omega/2."""


class PhaseError(Dicke2pError):
    """Operation requested in the wrong phase, or inside the near-critical guard band."""


class InstabilityError(Dicke2pError):
    """Quadratic bosonic form that is not bounded from below."""


class DimensionError(Dicke2pError):
    """Hilbert space larger than the configured cap."""


class ConvergenceError(Dicke2pError):
    """Iterative eigensolver failure."""

    def __init__(self, message: str, residuals=None) -> None:
        super().__init__(message)
        self.residuals = [] if residuals is None else list(residuals)


class InsufficientDataError(Dicke2pError):
    """Not enough usable points to fit a power law."""


class UsageError(Dicke2pError):
    """Invalid command-line flag or configuration key."""

    def __init__(self, message: str, flag: str = None) -> None:
        super().__init__(message)
        self.flag = flag
