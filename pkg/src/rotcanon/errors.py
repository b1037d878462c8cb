"""Exception hierarchy shared by every module of the package."""


class RotcanonError(Exception):
    """Base class for all errors raised by rotcanon."""


class GraphDomainError(RotcanonError, ValueError):
    """Input violates a structural requirement (unknown vertex, bad dart, ...)."""


class DisconnectedGraphError(GraphDomainError):
    """Operation requires a connected graph."""


class SizeGuardError(RotcanonError):
    """An exhaustive search would exceed its configured budget."""


class PreconditionError(RotcanonError):
    """Input is well formed but outside the class an algorithm accepts
    (for example, not 3-connected or not planar)."""


class InvariantError(RotcanonError, RuntimeError):
    """An internal consistency check failed."""


class ConstructionError(RotcanonError):
    """A generator produced an object failing its own self-check."""


class ParseError(RotcanonError, ValueError):
    """Malformed graph or grid document."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
