"""Exception hierarchy shared by every module of the package."""


class AlgebraError(ValueError):
    """Base class for all errors raised by makalg."""


class ZeroQError(AlgebraError):
    """q is not invertible."""


class RepeatedUError(AlgebraError):
    """Two of the parameters u_i coincide, so Delta vanishes."""


class BadShapeError(AlgebraError):
    pass


class OutOfRangeError(AlgebraError):
    pass


class IndexOutOfRangeError(AlgebraError):
    pass


class SizeMismatchError(AlgebraError):
    pass


class ContextMismatchError(AlgebraError):
    """Operands live in algebras built from different parameter sets."""


class NotSymmetrizingError(AlgebraError):
    """The product u_1...u_r vanishes, so the dual basis does not exist."""


class SizeGuardError(AlgebraError):
    """The requested computation is beyond desk scale."""


class BadLabelError(AlgebraError):
    pass


class IdentityFailure(AssertionError):
    """An identity that must hold in the algebra failed (an engine bug)."""


class ExpressionSyntaxError(AlgebraError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
