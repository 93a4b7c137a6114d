"""Exception hierarchy shared by every loopgrass app."""


class LoopgrassError(Exception):
    """Base class for every error raised by the toolkit."""


class DomainError(LoopgrassError, ValueError):
    """An operation was called outside its domain."""


class DimensionError(DomainError):
    """Shapes of matrices or vectors do not fit together."""


class WindowTooLarge(DomainError):
    """The requested window exceeds LOOPGRASS_MAX_WINDOW slots."""


class RootOnCircleError(DomainError):
    """A polynomial vanishes somewhere on the unit circle."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate or {}


class InvariantViolation(LoopgrassError):
    """A checked mathematical invariant failed to hold."""


class LoopValidationError(DomainError):
    """A matrix failed one or more loop invariants.

    ``violations`` is a list of ``{"error": code, "message": text}`` dicts,
    one entry per failed invariant.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        codes = ", ".join(v["error"] for v in self.violations)
        super().__init__(f"loop validation failed: {codes}")
