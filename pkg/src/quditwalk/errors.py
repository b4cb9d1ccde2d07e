"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Invalid user input: dimensions, digits, gate placement, CLI arguments."""


class UnsupportedError(RuntimeError):
    """The requested operation is outside what the chosen strategy supports."""
