"""Domain errors raised by the library.

Each error carries a stable ``code`` string; the CLI prefixes messages
with ``error: <code>:`` so callers can match on it.
"""


class DomainError(Exception):
    """Base class for errors caused by the caller's input values."""

    code = "domain-error"


class NotATripleError(DomainError):
    """The three integers do not satisfy x^2 + y^2 = z^2."""

    code = "not-a-triple"


class NotPrimitiveError(DomainError):
    """The triple has a common factor; reduce it first (see decompose_general)."""

    code = "not-primitive"


class MalformedTripleError(DomainError):
    """Inversion produced an impossible intermediate value.

    Unreachable for genuine primitive triples; kept as a defensive check.
    """

    code = "malformed"


class SizeLimitError(DomainError):
    """A rendered diagram would exceed the pixel size limit."""

    code = "size-limit"
