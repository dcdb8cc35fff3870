"""Shared exception types."""


class InfeasibleError(RuntimeError):
    """An exact computation was requested beyond its configured size bound.

    Raised instead of silently degrading; carries the offending size and bound.
    """

    def __init__(self, message: str, size=None, bound=None):
        super().__init__(message)
        self.size = size
        self.bound = bound
