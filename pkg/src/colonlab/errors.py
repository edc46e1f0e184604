"""Exception types shared across the package."""


class UsageError(Exception):
    """A caller violated an interface contract (bad arguments, mixed rings, ...)."""


class PreconditionError(Exception):
    """A mathematical hypothesis of an operation does not hold for the input."""


class InternalError(Exception):
    """An invariant that should be unbreakable was broken; indicates a bug."""


class ParseError(UsageError):
    """Syntax or semantic error in polynomial input, with source location."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (at line {line}, column {col})")
        self.line = line
        self.col = col
