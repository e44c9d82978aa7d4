"""Exception types shared across the package."""


class LPregroupError(Exception):
    """Base class for every error raised by this library."""


class InvalidPeriod(LPregroupError):
    """Period modulus is not a positive integer."""


class NotMonotone(LPregroupError):
    """Value sequence violates within-period or wrap monotonicity."""


class ValueBoundExceeded(LPregroupError):
    """A map value left the configured magnitude bound."""


class PeriodMismatch(LPregroupError):
    """Binary operation on maps with different period moduli."""


class NotDivisible(LPregroupError):
    """Rescale target is not a multiple of the current period."""


class EmptyPSet(LPregroupError):
    """core() asked for a map whose positivity set is empty."""


class NotFlat(LPregroupError):
    """Operation requires a positive flat element."""


class NoWitness(LPregroupError):
    """No index witnesses the periodicity defect needed for boosting."""


class NotProperPeriodicity(LPregroupError):
    """Element's periodicity does not match its ambient period."""


class NotPositive(LPregroupError):
    """Operation requires a positive element."""


class SearchExhausted(LPregroupError):
    """Bounded word search ended without finding a decomposition."""

    def __init__(self, limit: int):
        super().__init__(f"no word of length <= {limit} evaluates to the target")
        self.limit = limit


class PreconditionFailed(LPregroupError):
    """Structural precondition of an operation does not hold."""


class TermSyntaxError(LPregroupError):
    """Term text could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnboundVariable(LPregroupError):
    """Evaluation met a variable missing from the assignment."""


class ShapeMismatch(LPregroupError):
    """Product-model operation on elements with different shape parameters."""


class BoundsTooLarge(LPregroupError):
    """Exhaustive assignment space exceeds the configured ceiling."""


class EmptySet(LPregroupError):
    """Axiom schema instantiated over an empty index set."""


class EmptySignature(LPregroupError):
    """Variety operation requires a nonempty signature."""
