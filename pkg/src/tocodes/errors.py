"""Exception hierarchy shared by every module."""


class ToCodesError(Exception):
    """Base class for all errors raised by tocodes."""


class InvalidInput(ToCodesError, ValueError):
    """Parameters outside an operation's domain."""


class DegreeMismatch(InvalidInput):
    pass


class NotIrreducible(InvalidInput):
    pass


class NotPrimitive(InvalidInput):
    """The defining polynomial is irreducible but its root does not generate GF(3^m)*."""


class ExponentInC1(InvalidInput):
    """e lies in the cyclotomic coset of 1, so m_alpha and m_alpha^e coincide."""


class DivisionByZero(ToCodesError, ZeroDivisionError):
    pass


class CoefficientNotInBaseField(ToCodesError, ArithmeticError):
    """A product that must land in GF(3)[x] did not; signals an arithmetic bug."""


class InconsistentEnumerator(ToCodesError, ArithmeticError):
    pass


class BudgetExceeded(ToCodesError):
    """The requested computation is larger than the configured budget."""
