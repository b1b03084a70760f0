"""Exception types shared across the package."""


class PreconditionError(ValueError):
    """A parameter point violates a stated convergence or domain condition."""
