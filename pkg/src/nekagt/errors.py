"""Exception types shared across the package."""


class NekAGTError(Exception):
    pass


class DegenerateParameters(NekAGTError):
    """A weight vanished where it appears with a negative exponent."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class NonUnitSeries(NekAGTError):
    pass


class NonConvergent(NekAGTError):
    pass


class SingularGram(NekAGTError):
    def __init__(self, message, level=None):
        super().__init__(message)
        self.level = level


class TailMismatch(NekAGTError):
    pass


class CrossCheckFailure(NekAGTError):
    def __init__(self, message, first=None, second=None):
        super().__init__(message)
        self.first = first
        self.second = second


class TruncationExceeded(NekAGTError):
    pass
