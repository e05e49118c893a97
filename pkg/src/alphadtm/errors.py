"""Exception types raised by the solvers and the CLI."""


class DtmError(Exception):
    """Base class for every error raised by this package."""


class ShapeMismatchError(DtmError, ValueError):
    """Two jets do not share an interval or a truncation order."""


class InsufficientOrderError(DtmError, ValueError):
    pass


class SingularSystemError(DtmError, ArithmeticError):
    """The 2x2 boundary system has an exactly vanishing determinant."""


class DegenerateRootError(DtmError, ArithmeticError):
    """Both rows of the characteristic matrix vanish at a root."""


class ResonanceError(DtmError, ArithmeticError):
    pass


class NotAnEigenvalueError(DtmError, ValueError):
    pass


class ConfigError(DtmError, ValueError):
    """A problem config failed validation.  ``key`` names the offending field."""

    def __init__(self, key, message):
        super().__init__(f"{key}: {message}")
        self.key = key
        self.message = message
