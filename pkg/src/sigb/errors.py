"""Exception types shared across the package."""


class SigbError(Exception):
    """Base class for all errors raised by this package."""


class InversionOfZero(SigbError):
    """Multiplicative inverse of zero was requested."""


class ArityMismatch(SigbError):
    """Monomials over different variable sets were combined."""


class NotDivisible(SigbError):
    """Monomial quotient requested for a non-divisor."""


class DegreeOverflow(SigbError):
    """Total degree exceeds the fixed-width monomial encoding."""


class ZeroOperand(SigbError):
    """A nonzero polynomial was required."""


class AmbiguousOrder(SigbError):
    """Module order cannot be total for the given generator context."""


class NoRewriter(SigbError):
    """No element of the basis or syzygy set divides the given signature."""


class RequiresHomogeneous(SigbError):
    """The degree-stepping matrix mode needs homogeneous input."""


class UnknownSystem(SigbError):
    """Unrecognized benchmark system name."""


class UnknownVariable(SigbError):
    """Polynomial text references a variable missing from the header."""


class ParseError(SigbError):
    """Syntax error in a system file, with 1-based position info."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
