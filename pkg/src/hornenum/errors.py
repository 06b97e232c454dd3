"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """A size cap or wall-clock budget was exceeded before a result was produced.

    Carries whatever partial statistics were gathered, so callers can report
    progress instead of a bare failure.
    """

    def __init__(self, message: str, stats=None):
        super().__init__(message)
        self.stats = stats


class ExternalToolError(RuntimeError):
    """An external counting command failed or produced unusable output."""

    def __init__(self, message: str, command: str | None = None, output: str | None = None):
        super().__init__(message)
        self.command = command
        self.output = output


class ParseError(ValueError):
    """Syntax error in one of the text formats, with 1-based position info."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
