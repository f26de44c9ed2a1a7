"""
Exception types raised by the enumeration services.
"""

from typing import Optional


class MCEError(Exception):
    """Base class for every error raised by the clique toolkit."""


class EdgeListParseError(MCEError, ValueError):
    """An edge-list line could not be parsed."""

    def __init__(self, line_number: int, message: str):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


class VertexRangeError(MCEError, IndexError):
    """A vertex id lies outside 0..n-1."""

    def __init__(self, vertex: int, vertex_count: int):
        self.vertex = vertex
        self.vertex_count = vertex_count
        super().__init__(f"vertex {vertex} out of range for graph with n={vertex_count}")


class OracleCapacityError(MCEError):
    """The exhaustive oracle was asked to enumerate too many subsets."""


class GeneratorParameterError(MCEError, ValueError):
    """Random graph generator parameters describe no simple graph."""


class ContractViolation(MCEError):
    """A pre-condition or branch invariant does not hold."""


class CrossCheckError(MCEError):
    """Two runs over the same graph disagree on the clique digest."""

    def __init__(self, message: str, pair: Optional[tuple] = None):
        self.pair = pair
        super().__init__(message)
