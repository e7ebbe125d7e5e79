"""Exception types shared across the package."""


class DomainError(ValueError):
    """A precondition on a function argument was violated."""


class ConvergenceError(RuntimeError):
    """An iterative scheme or quadrature failed to reach its tolerance."""


class SingularityError(DomainError):
    """An evaluation point fell inside the exclusion radius of a singularity."""
