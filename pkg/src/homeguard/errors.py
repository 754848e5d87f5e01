"""Exception hierarchy shared by every HomeGuard module."""


class HomeGuardError(Exception):
    """Base class for all errors raised by this package."""


class EmptyMessage(HomeGuardError):
    """The message contains nothing but whitespace."""


class NotEmergency(HomeGuardError):
    """The emergency prefilter rejected the message."""

    def __init__(self, reason, matched=()):
        super().__init__(reason)
        self.reason = reason
        self.matched = tuple(matched)


class LexiconFormatError(HomeGuardError):
    def __init__(self, message, line):
        super().__init__(f"line {line}: {message}")
        self.line = line


class TurtleSyntaxError(HomeGuardError):
    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownPrefixError(HomeGuardError):
    def __init__(self, prefix, position=None):
        where = f" at {position}" if position is not None else ""
        super().__init__(f"undeclared prefix {prefix!r}{where}")
        self.prefix = prefix
        self.position = position


class MalformedQueryError(HomeGuardError):
    def __init__(self, message, position=None):
        where = f" at offset {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
        self.position = position


class UnknownLevel(HomeGuardError):
    """A crime level node is missing from the taxonomy graph."""


class OutOfRangeCoordinate(HomeGuardError, ValueError):
    """Latitude or longitude outside the valid range."""


class NoSuchServiceType(HomeGuardError):
    """The directory has no services of the requested type."""


class StoreIoError(HomeGuardError):
    """The incident store could not be read or written."""
