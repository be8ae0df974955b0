"""Exception hierarchy shared by all modules."""


class MWSError(Exception):
    """Base class for every error raised by this package."""


# field
class NotPrimePower(MWSError, ValueError):
    pass


class TooLarge(MWSError, ValueError):
    pass


class DivisionByZero(MWSError, ZeroDivisionError):
    pass


class FieldMismatch(MWSError, ValueError):
    pass


# geometry / codes
class DimensionMismatch(MWSError, ValueError):
    pass


class TooLargeToEnumerate(MWSError):
    pass


class TooLongToMaterialize(MWSError):
    pass


class ZeroRepetition(MWSError, ValueError):
    pass


class DegenerateCode(MWSError, ValueError):
    pass


# constructions
class PropertyViolated(MWSError):
    pass


class PropertyAViolated(PropertyViolated):
    pass


class PropertyBViolated(PropertyViolated):
    pass


class PairwiseVMismatch(PropertyViolated):
    pass


class UnsupportedQ(MWSError, ValueError):
    pass


class NotMWS(MWSError):
    pass


class LengthTooLarge(MWSError, ValueError):
    pass


class VerificationFailed(MWSError):
    """A construction produced an object that failed its own check."""


# io
class ParseError(MWSError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class EncodingOutOfRange(ParseError):
    pass


class NonCanonicalPoint(ParseError):
    pass
