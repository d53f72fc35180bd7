"""Exception hierarchy shared by every module."""


class AbsorbError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(AbsorbError, ValueError):
    def __init__(self, text, position, expected):
        self.text = text
        self.position = position
        self.expected = expected
        pointer = " " * position + "^"
        super().__init__(f"expected {expected} at position {position}\n  {text}\n  {pointer}")


class NonPrimeModulus(AbsorbError, ValueError):
    pass


class NonMonicPoly(AbsorbError, ValueError):
    pass


class SizeCapExceeded(AbsorbError):
    pass


class CostCapExceeded(AbsorbError):
    pass


class ImproperIdeal(AbsorbError, ValueError):
    pass


class RingMismatch(AbsorbError, ValueError):
    pass


class VariableCountMismatch(AbsorbError, ValueError):
    pass


class UnsupportedFormatForPayload(AbsorbError, ValueError):
    pass
