"""Exception types shared across the toolkit."""


class TriflowError(Exception):
    """Base class for all toolkit errors."""


class DomainError(TriflowError):
    """A precondition on an operation's inputs was violated."""


class LoopEdgeError(DomainError):
    """An operation would accept or create a loop edge."""


class ParseError(TriflowError):
    """Malformed input text; carries a 1-based line number when known."""

    def __init__(self, message: str, *, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapabilityError(TriflowError):
    """The input exceeds the size this implementation decides exactly."""


class CatalogError(DomainError):
    """Unknown catalog name, bad parameter, or an entry with no adjacency data."""


class UnknownLemmaError(DomainError):
    """A lemma sweep was requested for an id that is not registered."""
