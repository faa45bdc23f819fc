class PseudoEigError(Exception):
    """Base class for all errors raised by this package."""

    kind = "numerical"


class DimensionError(PseudoEigError, ValueError):
    kind = "dimension"


class NumericallySingular(PseudoEigError):
    """A triangular solve hit a diagonal entry below eps * ||R||_F."""


class NoConvergence(PseudoEigError):
    pass


class StaircaseBreakdown(PseudoEigError):
    """A chain vector collapsed during initialization (k too large or lambda0 far off)."""


class RankDeficientJacobian(PseudoEigError):
    """The partial Jacobian lost column rank; the geometric multiplicity is likely too small."""


class RankDeficientX(PseudoEigError):
    pass


class MatrixParseError(PseudoEigError, ValueError):
    kind = "parse"

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
