"""Exception types shared across the package."""


class MirkinError(Exception):
    """Base class for all errors raised by this package."""


class LengthMismatch(MirkinError, ValueError):
    def __init__(self, left: int, right: int):
        super().__init__(f"length mismatch: {left} != {right}")
        self.left = left
        self.right = right


class PositionOutOfRange(MirkinError, IndexError):
    pass


class InvalidParameter(MirkinError, ValueError):
    pass


class ParseError(MirkinError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class ArithmeticOverflow(MirkinError, OverflowError):
    """A value left the signed 64-bit range used for distances and budgets."""


class InstanceTooLarge(MirkinError):
    """The instance exceeds a configured enumeration cap."""


class InfeasibleBudget(MirkinError):
    """No assignment meets the budget row; carries the optimal result."""

    def __init__(self, result):
        super().__init__(
            f"budget {result.budget} infeasible: optimum is {result.value}")
        self.result = result
