"""Exception hierarchy shared across the package."""


class QuasigradeError(Exception):
    """Base class for all errors raised by this package."""


class InputFormatError(QuasigradeError, ValueError):
    """Malformed text input (rationals, quasipolynomial files, polytope files)."""


class InsufficientSamplesError(QuasigradeError, ValueError):
    """A residue class does not carry enough sample points for the requested fit."""


class InconsistentSamplesError(QuasigradeError, ValueError):
    """Surplus sample points contradict the fitted polynomial of a residue class."""


class InconsistentFitError(QuasigradeError):
    """A fitted quasipolynomial failed validation against fresh values.

    This signals an internal defect, never a user error.
    """


class PolytopeError(QuasigradeError, ValueError):
    """Invalid polytope data (empty set, unbounded set, degenerate input)."""


class KernelConfigError(QuasigradeError, ValueError):
    """Unknown counting-backend selection."""
