"""Exception hierarchy.

Input-validation failures derive from :class:`ValidationError` (a
``ValueError``); graph6 parse failures from :class:`ParseError`.  The CLI maps
the two families to exit codes 3 and 2.
"""


class EccSpectraError(Exception):
    pass


class ValidationError(EccSpectraError, ValueError):
    pass


class ParseError(EccSpectraError, ValueError):
    pass


class DisconnectedInput(ValidationError):
    pass


class SelfLoop(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class NotATree(ValidationError):
    pass


class OrderTooSmall(ValidationError):
    pass


class OrderOutOfRange(ValidationError):
    pass


class ParameterMismatch(ValidationError):
    pass


class ParameterOutOfRange(ValidationError):
    pass


class EvenDiameter(ValidationError):
    pass


class ReducibleMatrix(ValidationError):
    pass


class MalformedGraph6(ParseError):
    pass


class UnsupportedOrder(ParseError):
    pass


class ConvergenceFailure(EccSpectraError, ArithmeticError):
    """An iterative kernel hit its iteration cap; indicates a bug, not bad input."""
