"""Exception types shared across the package."""


class SgError(Exception):
    """Base class for all errors raised by this package."""


class LoopRejected(SgError):
    """An edge with both ends on the same vertex was supplied."""


class BadVertex(SgError):
    """Vertex id out of range."""


class BadEdge(SgError):
    """Edge id out of range or otherwise unusable."""


class SameEdge(SgError):
    """Two distinct edges were required but the same id was given twice."""


class NotACycle(SgError):
    """An edge sequence or edge set does not form a simple cycle."""


class NotTwoConnected(SgError):
    """The operation requires a 2-connected graph."""


class DomainMismatch(SgError):
    """Two signatures do not share the same edge domain."""


class PreconditionViolated(SgError):
    """A documented structural precondition does not hold."""


class BudgetExhausted(SgError):
    """A bounded search ran out of budget before completing."""


class BadParams(SgError):
    """Generator parameters are out of range or inconsistent."""


class BadRecipe(SgError):
    """A composition recipe cannot be applied to its operands."""


class ParseError(SgError):
    """A graph or certificate file is malformed.

    Carries the 1-based line number when one is known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
