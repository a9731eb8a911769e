"""
Exceptions raised by strongchordal.

Only malformed input and misuse raise. Negative answers (an order that is
not a strong elimination order, a graph that is not strongly chordal, a
cycle in the overshadow digraph) are returned as result values.
"""


class StrongChordalError(Exception):
    """Base class for every error raised by this package."""


class GraphFormatError(StrongChordalError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f'{message} at line {line}'
        super().__init__(message)


class RepresentationFormatError(GraphFormatError):
    pass


class UnknownVertexError(StrongChordalError, KeyError):
    def __init__(self, vertex, what='vertex'):
        self.vertex = vertex
        super().__init__(f'unknown {what} {vertex!r}')

    def __str__(self):
        # KeyError would repr() the message
        return self.args[0]


class InvalidSubtreeError(StrongChordalError):
    pass


class HostTreeError(StrongChordalError):
    pass


class OrderMismatchError(StrongChordalError):
    pass


class InvalidOrderError(StrongChordalError):
    """
    Raised by the order-to-representation constructions when the input
    order fails its check. ``verdict`` is the failing OrderVerdict.
    """

    def __init__(self, verdict, kind):
        self.verdict = verdict
        self.kind = kind
        super().__init__(f'order is not a {kind} elimination order: {verdict.describe()}')


class RepresentationMismatchError(StrongChordalError):
    pass


class RefusalError(StrongChordalError):
    def __init__(self, size, limit, what):
        self.size = size
        self.limit = limit
        super().__init__(f'{what} refuses graphs with {size} vertices (limit {limit})')


class GeneratorParameterError(StrongChordalError, ValueError):
    pass


class EmptyGraphError(StrongChordalError, ValueError):
    """The operation needs at least one vertex."""


class InputFileError(StrongChordalError):
    """An input file could not be read or an output file could not be written."""
