"""Exception hierarchy.

Every mathematical failure raises a subclass of :class:`MathError` so that
callers (and the command line front end) can tell a violated precondition
apart from a programming error.
"""


class MathError(ValueError):
    """A mathematical precondition or postcondition does not hold."""


class DimensionError(MathError):
    """Operand shapes are incompatible."""


class DegenerateSubspaceError(MathError):
    """A spanning set has numerical rank zero, or a required basis is dependent."""


class NotPositiveDefiniteError(MathError):
    """Cholesky factorization met a nonpositive pivot."""


class SingularMatrixError(MathError):
    """A matrix or a restricted quadratic form is numerically singular."""


class ConvergenceError(MathError):
    """An iteration did not converge.

    The number of sweeps performed is stored on ``sweeps``.
    """

    def __init__(self, message, sweeps):
        super().__init__(message)
        self.sweeps = sweeps


class PreconditionError(MathError):
    """Inputs violate the hypothesis of the requested construction."""
