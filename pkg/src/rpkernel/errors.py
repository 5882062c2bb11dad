"""Exception hierarchy shared by every module."""


class RPKError(Exception):
    """Base class for all errors raised by this package."""


class InvalidDigraph(RPKError, ValueError):
    pass


class EmptyVertexSet(RPKError, ValueError):
    pass


class SameEndpoints(RPKError, ValueError):
    pass


class InstanceTooLarge(RPKError):
    pass


class NotAcyclic(RPKError):
    pass


class PreconditionFailed(RPKError):
    """A constructor was called on an instance outside its hypothesis class."""

    def __init__(self, condition: str, detail: str = "") -> None:
        self.condition = condition
        self.detail = detail
        super().__init__(f"precondition failed: {condition}" + (f" ({detail})" if detail else ""))


class TheoremViolation(RPKError):
    """A guaranteed object was not found; this indicates a bug and must not be swallowed."""


class UnknownFixture(RPKError, KeyError):
    pass


class DocumentError(RPKError, ValueError):
    """Malformed instance document; carries a position when one is known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None) -> None:
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
