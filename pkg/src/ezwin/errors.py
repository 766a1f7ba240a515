"""Exception hierarchy for ezwin."""


class EzWinError(Exception):
    """Base class for all library errors."""


class InvalidSize(EzWinError, ValueError):
    pass


class InvalidPosition(EzWinError, ValueError):
    pass


class UnknownWindow(EzWinError, KeyError):
    """The handle does not name a window, or the window was closed."""

    def __str__(self):
        return Exception.__str__(self)


class ClosedWindow(EzWinError):
    """A shape or bitmap was used after its window closed."""


class UnknownShape(EzWinError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownBitmap(EzWinError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class MalformedImage(EzWinError, ValueError):
    pass


class ImageNotFound(EzWinError, FileNotFoundError):
    pass


class TimerError(EzWinError):
    """Raised when a timer is started before an interval is set."""


class ParseError(EzWinError):
    """A scene or trace line could not be parsed.

    ``line`` is 1-based; ``token`` is the offending token, if any.
    """

    def __init__(self, message, line, token=None, source=None):
        self.message = message
        self.line = line
        self.token = token
        self.source = source
        super().__init__(str(self))

    def __str__(self):
        where = f"{self.source}:{self.line}" if self.source else f"line {self.line}"
        if self.token is not None:
            return f"{where}: {self.message} (at {self.token!r})"
        return f"{where}: {self.message}"


class UnknownName(ParseError):
    pass


class DuplicateName(ParseError):
    pass
