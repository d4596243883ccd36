"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a documented precondition.

    The message names the precondition so callers (and the CLI, which maps
    this to exit code 1) can see which contract was broken.
    """


class ResourceLimitError(DomainError):
    """An instance exceeds a configured search or memory budget."""
