"""Exception hierarchy shared by every module of the package."""


class PlacementError(Exception):
    """Base class for all errors raised by placement_complex."""


class InvalidSizeError(PlacementError, ValueError):
    """A board constructor was given a dimension it cannot build."""


class BoardParseError(PlacementError, ValueError):
    def __init__(self, line_no: int, line: str, reason: str):
        self.line_no = line_no
        self.line = line
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}: {line!r}")


class MonomialParseError(PlacementError, ValueError):
    pass


class DomainError(PlacementError, ValueError):
    """An argument refers to a variable, vertex or board outside the declared domain."""


class SizeLimitError(PlacementError):
    """An enumeration-facing operation was asked to exceed its cap."""


class UnsupportedBoardError(PlacementError):
    pass


class RulesetViolationError(PlacementError):
    """Pruned enumeration found a legal position with an illegal one-smaller subposition."""


class ConsistencyError(PlacementError):
    """Two independent computations of the same object disagree."""


class IllegalMoveError(PlacementError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)
