class GolayError(Exception):
    """Base class for all errors raised by golaysc."""

    pass


class DimensionError(GolayError, ValueError):
    """Raised when matrix or vector shapes do not line up."""

    pass


class RankError(GolayError):
    """Raised when a check matrix does not have full row rank."""

    pass


class ConstructionError(GolayError):
    """Raised when a code or schedule cannot be built from the given parts."""

    pass


class DecoderError(GolayError):
    """Raised on decoder misuse, i.e. out-of-order phases or an invalid list size."""

    pass


class ConfigError(GolayError):
    pass


class InputFormatError(GolayError):
    """Raised when an LLR input line cannot be parsed."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number
