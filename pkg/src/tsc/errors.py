"""Exception types shared across the package."""


class TSCError(Exception):
    """Base class for all library errors."""


class ParseError(TSCError, SyntaxError):
    """Malformed ordinal, formula or sequent text.

    ``position`` is a 0-based offset into ``text``; ``line`` and ``column``
    are 1-based.
    """

    def __init__(self, message, text="", position=0):
        self.message = message
        self.text = text
        self.position = position
        before = text[:position]
        self.line = before.count("\n") + 1
        self.column = position - (before.rfind("\n") + 1) + 1
        super().__init__(f"{message} at line {self.line}, column {self.column}")
        self.msg = message
        self.lineno = self.line
        self.offset = self.column

    def __str__(self):
        return f"{self.message} at line {self.line}, column {self.column}"


class OrdinalUnderflow(TSCError, ArithmeticError):
    """Left subtraction -b + a requested with b > a."""


class NotDivisible(TSCError, ArithmeticError):
    """Left division has no exact quotient."""


class InvalidDivisor(TSCError, ValueError):
    """Left division by something other than a power of omega."""


class InvariantViolation(TSCError, ValueError):
    """A value does not satisfy the invariants of its normal-form type."""


class PreconditionViolation(TSCError, ValueError):
    """An operation was called outside its precondition."""


class RuleMismatch(TSCError, ValueError):
    """Premises do not fit the shape or side condition of a rule."""


class ResourceLimit(TSCError, RuntimeError):
    """Bounded search exceeded its configured cardinality bound."""
