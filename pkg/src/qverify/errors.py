"""Exception hierarchy shared by every qverify module."""


class QVerifyError(Exception):
    """Base class for all errors raised by qverify."""


class DivisionByZero(QVerifyError, ZeroDivisionError):
    pass


class UnsupportedRoot(QVerifyError, ValueError):
    pass


class InvalidSubstitution(QVerifyError, ValueError):
    pass


class CannotDetermineValuation(QVerifyError, ZeroDivisionError):
    """Divisor is zero throughout its known window."""


class PrecisionTooLow(QVerifyError):
    pass


class NonGenericPole(QVerifyError):
    """A factor 1 - w with w exactly 1 was hit."""


class UnsupportedArgument(QVerifyError, ValueError):
    pass


class PrefactorZero(QVerifyError):
    """The theta prefactor j(z; q) of an Appell-Lerch sum vanishes."""


class DegenerateParameters(QVerifyError):
    pass


class UnsupportedForm(QVerifyError, ValueError):
    pass


class ParseError(QVerifyError, ValueError):
    """Syntax error in the identity language, with 1-based line and column."""

    def __init__(self, message, line=1, col=1, expected=()):
        self.line = line
        self.col = col
        self.expected = tuple(sorted(set(expected)))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"line {line}, column {col}: {message}{detail}")
