"""Exception types shared across the package."""


class CliffkError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSignatureError(CliffkError, ValueError):
    """A (p, q) signature with negative parts, or one outside a stated bound."""


class InvalidBladeError(CliffkError, ValueError):
    """A blade bitmask that does not fit the ambient signature."""


class SignatureMismatchError(CliffkError, ValueError):
    """Two elements that live over different signatures or scalar fields."""


class BoundExceededError(CliffkError, ValueError):
    """A computation was requested beyond its configured size bound."""


class EmbeddingError(CliffkError, ValueError):
    """The claimed subalgebra signature does not embed in the ambient one."""


class IllDefinedHomError(CliffkError, ValueError):
    """A homomorphism matrix that does not respect the source relations."""


class SearchSpaceError(CliffkError, ValueError):
    """An enumeration whose total size exceeds the configured ceiling."""


class SequenceParseError(CliffkError, ValueError):
    """A syntax or consistency error in a sequence file.

    The offending 1-based line number is stored in ``line``.
    """

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
