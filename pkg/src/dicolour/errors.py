"""Exception types shared by every module."""


class InputError(ValueError):
    """An argument violates an operation's precondition."""


class ParseError(InputError):
    """Malformed input document."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(RuntimeError):
    """An exhaustive search would exceed its configured size bound."""
