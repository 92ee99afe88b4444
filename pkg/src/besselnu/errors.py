"""Exception and warning types shared across the package."""


class ConvergenceError(ArithmeticError):
    """A truncated series ran out of terms before its stopping rule fired."""


class PoleError(ValueError):
    """A reciprocal Pochhammer symbol was requested at one of its poles."""


class OracleError(RuntimeError):
    """A verification oracle could not produce a usable estimate."""


class AccuracyWarning(UserWarning):
    """Inputs are outside the supported accuracy envelope (z <= 10, |nu| <= 10, k <= 6)."""
