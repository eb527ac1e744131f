"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NumericalError(ArithmeticError):
    """A numerical method failed to converge or lost all precision."""


class UnsupportedError(DomainError):
    """The requested evaluation path does not support these inputs."""
