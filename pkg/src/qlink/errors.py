"""Exception hierarchy shared by every qlink module."""


class QlinkError(ValueError):
    """Base class for all errors raised by qlink."""


class NotHermitian(QlinkError):
    pass


class NotPSD(QlinkError):
    pass


class UnsupportedSize(QlinkError):
    pass


class BadParameters(QlinkError):
    pass


class DimensionMismatch(QlinkError):
    pass


class BadWeights(QlinkError):
    pass


class BadSubset(QlinkError):
    pass


class BadLabel(QlinkError):
    pass


class MalformedData(QlinkError):
    """Serialized JSON that does not have the expected shape."""


class NotDensityOperator(QlinkError):
    pass


class NumericalFailure(QlinkError):
    pass


class BadBasisVector(QlinkError):
    pass


class IncompleteProjectors(QlinkError):
    pass


class WrongQubitCount(QlinkError):
    pass


class BadCount(QlinkError):
    pass


class KetSyntaxError(QlinkError):
    """Malformed ket expression; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class MixedArity(QlinkError):
    pass


class ZeroVector(QlinkError):
    pass


class NotNormalized(QlinkError):
    pass
