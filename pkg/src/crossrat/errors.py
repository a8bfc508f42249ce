"""Exception types shared across the package."""


class CycleParseError(ValueError):
    """Malformed cycle notation; ``token`` names the offending piece."""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


class CapExceeded(PreconditionError):
    """An enumeration would exceed the configured element cap."""
