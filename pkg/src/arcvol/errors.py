"""Exception types shared across the package."""


class ArcvolError(Exception):
    pass


class DimensionMismatch(ArcvolError, ValueError):
    pass


class NotPrimary(ArcvolError):
    """The ideal (or a sequence term) is not primary to the origin.

    Its colength is infinite. ``index`` is the offending sequence index when the
    error comes from a graded sequence.
    """

    def __init__(self, message="ideal is not primary at the origin", index=None):
        if index is not None:
            message = f"{message} (m={index})"
        super().__init__(message)
        self.index = index


class ZeroIdeal(ArcvolError):
    pass


class UnitIdeal(ArcvolError):
    pass


class InfiniteVolume(ArcvolError):
    pass


class OutOfRange(ArcvolError, IndexError):
    pass


class HypothesisViolated(ArcvolError):
    def __init__(self, condition, witness):
        super().__init__(f"hypothesis {condition} violated at {witness}")
        self.condition = condition
        self.witness = witness


class ParseError(ArcvolError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
