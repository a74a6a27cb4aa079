"""Exception hierarchy shared by the projectors, the LP engine and the CLI."""


class ProjectionError(Exception):
    """Base class for every error raised by :mod:`l1boundary`."""


class InvalidInputError(ProjectionError, ValueError):
    """Malformed numeric input (NaN/inf entries, bad exponent, bad weights)."""


class DimensionError(InvalidInputError):
    pass


class DomainError(InvalidInputError):
    pass


class ZeroRowError(InvalidInputError):
    def __init__(self, row):
        self.row = row
        super().__init__(f"row {row} of A is entirely zero")


class NotInteriorError(ProjectionError):
    def __init__(self, message="query point is not interior"):
        super().__init__(message)


class UnboundedBoundaryError(ProjectionError):
    pass


class NumericalBreakdown(ProjectionError):
    pass


class LpFailure(ProjectionError):
    """An LP needed by a projector or oracle did not solve cleanly."""


class RadiusHintViolation(ProjectionError):
    pass


class ProofInvariantViolation(ProjectionError):
    def __init__(self, message, point=None):
        self.point = point
        super().__init__(message)


class GlobalityViolation(ProjectionError):
    def __init__(self, message, direction=None):
        self.direction = direction
        super().__init__(message)
