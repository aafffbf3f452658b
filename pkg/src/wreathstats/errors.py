"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all wreathstats errors."""


class NotABijection(Error):
    """The value sequence repeats or misses a value of 1..n."""


class ColorOutOfRange(Error):
    """Some color lies outside 0..r-1."""


class ShapeMismatch(Error):
    """Operands or an order do not share the same (r, n)."""


class ShapeInvalid(Error):
    """A group or generator-set shape is not admissible."""


class DomainError(Error):
    """Operation not defined for this family / color count / parameters."""


class BudgetExceeded(Error):
    """Requested enumeration or search exceeds the configured state budget."""


class NotGenerated(Error):
    """BFS finished without reaching every element of the universe."""


class MissingOrder(Error):
    """An order-sensitive statistic was requested without a linear order."""


class OrderError(Error):
    """Bad order construction: unknown letter, bad index, incomplete list."""


class ParseError(Error):
    """Malformed element or order text; carries the 1-based token position."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"token {position}: {message}"
        super().__init__(message)
        self.position = position


class UnknownIdentity(Error):
    """Identity id not present in the registry."""


class UnknownFormula(Error):
    """closed_form tag not registered."""


class NegativeN(Error):
    """q-analog constructors require n >= 0."""
