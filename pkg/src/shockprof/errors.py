"""Exception types shared across the package."""


class ShockprofError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(ShockprofError, ValueError):
    """An argument violates a documented precondition."""


class NoShockError(InvalidInputError):
    """The amplitude parameter lies outside the open interval (3/4, 1)."""


class DegenerateClassificationError(ShockprofError):
    """A characteristic speed sits on zero, so the Lax sign count is undefined."""


class SingularLinearizationError(ShockprofError):
    """det B vanishes at a rest point; the linearized flow B^-1 A does not exist."""
