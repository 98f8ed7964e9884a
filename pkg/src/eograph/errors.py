"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class EOGraphError(Exception):
    """Base class for all errors raised by :mod:`eograph`."""


class GraphValidationError(EOGraphError, ValueError):
    pass


class UnknownVertex(GraphValidationError):
    pass


class SelfLoop(GraphValidationError):
    pass


class DuplicateEdge(GraphValidationError):
    pass


class MissingPoint(GraphValidationError):
    pass


class EmptyGraph(GraphValidationError):
    pass


class EOGSyntaxError(EOGraphError, ValueError):
    """Malformed EOG or map text. ``lineno`` is 1-based, ``None`` when not tied to a line."""

    def __init__(self, message: str, lineno: int | None = None) -> None:
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class NotConnected(EOGraphError, ValueError):
    pass


class InvalidPath(EOGraphError, ValueError):
    pass


class ImproperPath(InvalidPath):
    pass


class NotCoInitial(EOGraphError, ValueError):
    pass


class Unreachable(EOGraphError, ValueError):
    pass


class EnumerationBoundExceeded(EOGraphError, RuntimeError):
    pass


class NotATraversal(EOGraphError, ValueError):
    pass


class NotALexGraph(EOGraphError, ValueError):
    pass


class CyclicClosure(NotALexGraph):
    """The transitive closure would need a self-loop because the input has a cycle."""


class NotAnArborescence(EOGraphError, ValueError):
    pass


class NotTArb(EOGraphError, ValueError):
    pass


class EmptyOrder(EOGraphError, ValueError):
    pass


class NotAMorphism(EOGraphError, ValueError):
    pass


class WrongCategory(EOGraphError, ValueError):
    pass
