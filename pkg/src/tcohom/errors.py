"""base exceptions shared by every tcohom package."""


class TcohomError(Exception):
    """Base class of all errors raised by tcohom."""


class PreconditionError(TcohomError, ValueError):
    """Raised when an input violates the precondition of an operation.

    The name of the violated predicate is kept in predicate.
    """

    predicate: str

    def __init__(self, predicate: str, msg: str) -> None:
        """Create a new PreconditionError for the given predicate."""
        super().__init__(msg)
        self.predicate = predicate


class ConfigError(TcohomError, ValueError):
    """Raised when a lattice, form or run configuration cannot be read."""

    path: str
    """location of the offending field, e.g. entries[2].terms[0].k"""

    def __init__(self, path: str, msg: str, line: int | None = None) -> None:
        """Create a new ConfigError."""
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{path or '<root>'}: {msg}")
        self.path = path
        self.line = line


class NotExactError(PreconditionError):
    """Raised when exact arithmetic is requested for a lattice without an exact form."""

    def __init__(self, msg: str) -> None:
        """Create a new NotExactError."""
        super().__init__("exact-lattice", msg)
