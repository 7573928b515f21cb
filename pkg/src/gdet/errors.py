"""Exception hierarchy for gdet."""


class GdetError(Exception):
    """Base class for every error raised by gdet."""


class InvalidGroupError(GdetError, ValueError):
    pass


class InvalidElementError(GdetError, ValueError):
    pass


class MismatchError(GdetError, ValueError):
    """Objects that must share a group (or subgroup) do not."""


class DomainError(GdetError, ValueError):
    pass


class LevelError(GdetError, ValueError):
    """Cyclotomic levels disagree, or a root order does not divide the level."""


class CycZeroDivisionError(GdetError, ZeroDivisionError):
    pass


class NoSeparatorError(GdetError, ValueError):
    """Asked for a separating character of an element that lies in the subgroup."""


class IncompleteAssignmentError(GdetError, KeyError):
    pass


class OracleBoundError(GdetError, ValueError):
    pass


class InternalConsistencyError(GdetError, RuntimeError):
    pass


class TheoremViolationError(GdetError, RuntimeError):
    """A factorization identity failed to hold; always an implementation bug."""


class SingularElementError(GdetError, ArithmeticError):
    """The group determinant vanishes at the given assignment.

    ``character`` is the index tuple of a character whose linear form vanishes.
    """

    def __init__(self, message, character=None):
        super().__init__(message)
        self.character = character


class ParseError(GdetError, ValueError):
    def __init__(self, message, text="", position=None):
        if position is not None:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)
        self.text = text
        self.position = position


class RangeError(GdetError, ValueError):
    pass
