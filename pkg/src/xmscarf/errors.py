"""Exception types shared across the library."""


class XmScarfError(Exception):
    """Base class for all library-specific errors."""


class SingularPointError(XmScarfError):
    """A polynomial denominator vanishes at (or too close to) the evaluation point."""


class DegenerateParameterError(XmScarfError):
    """A closed-form expression is undefined for these parameters (zero denominator or gamma pole)."""


class NoSuchBoundStateError(XmScarfError):
    """The requested quantum number lies outside the discrete spectrum."""


class ConvergenceFailureError(XmScarfError):
    """An iterative numerical routine failed to converge."""
