"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """A precondition on the input parameters does not hold."""


class CapExceededError(RuntimeError):
    """An enumeration or search grew past its configured cap."""
