class ShapeError(ValueError):
    """Matrix or partition has the wrong shape for the requested operation."""


class FieldMismatch(ValueError):
    """Operands live over different fields."""


class UnsupportedField(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class DomainError(ValueError):
    pass


class SearchExhausted(RuntimeError):
    """A bounded random search ran out of trials without finding a witness."""


class ConsistencyError(ArithmeticError):
    """An internal exact identity failed; indicates an arithmetic bug."""
