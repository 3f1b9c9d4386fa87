"""Exception hierarchy shared by all modules."""


class UTImageError(Exception):
    """Base class for every error raised by :mod:`utimage`."""


class PolySyntaxError(UTImageError, ValueError):
    """Malformed polynomial expression; ``pos`` is the 0-based offset."""

    def __init__(self, message, pos=None, text=None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class NotMultilinear(UTImageError, ValueError):
    pass


class MissingAssignment(UTImageError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class SizeMismatch(UTImageError, ValueError):
    pass


class DegreeCapExceeded(UTImageError, ValueError):
    pass


class SolveFailure(UTImageError, RuntimeError):
    """Internal error: a linear system that must be consistent was not."""


class TargetOutsideImage(UTImageError, ValueError):
    pass


class WitnessSearchExhausted(UTImageError, RuntimeError):
    def __init__(self, message, attempts=0, evidence=None):
        super().__init__(message)
        self.attempts = attempts
        self.evidence = evidence
