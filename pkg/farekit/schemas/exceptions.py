class MalformedTableError(Exception):
    def __init__(self, message):
        super().__init__(message)


class InvalidGroupTableError(Exception):
    def __init__(self, message):
        super().__init__(message)


class NonUnitParameterError(Exception):
    def __init__(self, message):
        super().__init__(message)


class InvalidBiquandleError(Exception):
    """
    Raised when an operation needs a valid biquandle (invertible maps, exchange laws),
    but the given operation tables are not one.
    """
    def __init__(self, message: str):
        super().__init__(message)


class DiagramParseError(Exception):
    """
    Raised on malformed diagram text. Carries the 1-based line number of the offending line,
    or None when the problem is global (e.g. a semiarc that never closes up).
    """
    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f'line {line_number}: {message}'
        super().__init__(message)


class UnsupportedRouteOrderError(Exception):
    def __init__(self, message):
        super().__init__(message)


class UnsupportedFareError(Exception):
    def __init__(self, message):
        super().__init__(message)


class FareParseError(Exception):
    def __init__(self, message):
        super().__init__(message)


class GroupSpecError(Exception):
    def __init__(self, message):
        super().__init__(message)


class RenderingError(Exception):
    def __init__(self, message):
        super().__init__(message)


class UnknownLinkError(Exception):
    def __init__(self, message):
        super().__init__(message)
