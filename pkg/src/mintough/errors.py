from __future__ import annotations


class MintoughError(Exception):
    """Base class for errors raised by this package."""


class ParseError(MintoughError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(MintoughError, ValueError):
    """An operation was called on a graph outside its domain."""


class TTValidationError(PreconditionError):
    """Rejected input to the tree-to-TT construction.

    ``code`` is one of ``not_a_tree``, ``max_degree_below_3``,
    ``removed_set_dependent``, ``removed_vertex_degree`` and
    ``neighbor_degree``.
    """

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)
