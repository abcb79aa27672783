"""Exception hierarchy shared across the package."""


class DrdsError(Exception):
    """Base class for every error raised by :mod:`drdsr`."""


class ParseError(DrdsError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


class InvalidInstance(DrdsError):
    """An instance violates its construction invariants."""


class NotATree(DrdsError):
    pass


class NotSplit(DrdsError):
    pass


class PreconditionError(DrdsError):
    """A solver was called outside its graph class or parameter range."""


class NotApplicable(DrdsError):
    """The bounded-diameter shortcut does not apply to the instance."""


class LimitExceeded(DrdsError):
    """An exhaustive search hit its configured state or size limit."""


class MoveError(DrdsError):
    """A single token move is illegal. Subclasses name the reason."""

    reason = "IllegalMove"


class InvalidVertex(MoveError):
    reason = "InvalidVertex"


class NotAToken(MoveError):
    reason = "NotAToken"


class Occupied(MoveError):
    reason = "Occupied"


class NotAdjacent(MoveError):
    reason = "NotAdjacent"


class BreaksDomination(MoveError):
    reason = "BreaksDomination"
