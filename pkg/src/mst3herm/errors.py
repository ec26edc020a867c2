"""Exception hierarchy shared by all modules."""


class Mst3Error(Exception):
    """Base class for every error raised by this package."""


class FieldError(Mst3Error):
    pass


class NotPrime(FieldError):
    pass


class EvenCharacteristic(FieldError):
    pass


class ReducibleModulus(FieldError):
    pass


class NonPrimitiveGenerator(FieldError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class ContextMismatch(Mst3Error, ValueError):
    """Operands belong to different fields."""


class ZeroArgument(FieldError, ValueError):
    pass


class FieldTooLargeForTable(FieldError):
    pass


class FieldTooLargeForScan(FieldError):
    pass


class BadLength(FieldError, ValueError):
    pass


class BadDigit(FieldError, ValueError):
    pass


class OutOfRange(Mst3Error, ValueError):
    pass


class BadTypeForStage(Mst3Error, ValueError):
    pass


class ResidualNonzero(Mst3Error):
    """The target is not in the image of the logarithmic signature."""


class FactorizationFailed(Mst3Error):
    """Decryption could not recover the random index pair."""


class BadMessage(Mst3Error, ValueError):
    pass


class ParseError(Mst3Error, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class VersionMismatch(ParseError):
    pass


class SpaceTooLarge(Mst3Error):
    pass
