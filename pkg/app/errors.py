"""
Exception hierarchy for the Grundy toolkit.
Library functions raise these; the CLI and the HTTP layer translate them
into exit codes and status codes.
"""

from typing import Optional, Sequence


class GrundyError(ValueError):
    """Base class for every error raised by the toolkit."""


class ConfigError(GrundyError):
    """An environment setting could not be parsed."""


# ============================================
# Graph construction
# ============================================

class GraphError(GrundyError):
    """Invalid graph input."""


class SelfLoopError(GraphError):
    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"self-loop at vertex {vertex}")


class VertexRangeError(GraphError):
    def __init__(self, vertex: int, n: int):
        self.vertex = vertex
        self.n = n
        super().__init__(f"vertex {vertex} out of range for n={n}")


class OddCycleError(GraphError):
    """The graph is not bipartite; `cycle` is an odd cycle witnessing it."""

    def __init__(self, cycle: Sequence[int]):
        self.cycle = list(cycle)
        super().__init__(f"graph is not bipartite: odd cycle {self.cycle}")


class BipartitionError(GraphError):
    """A supplied bipartition does not fit the graph."""


class GenerationError(GrundyError):
    """A random generator ran out of retries."""


# ============================================
# Solver limits
# ============================================

class SizeLimitError(GrundyError):
    def __init__(self, operation: str, size: int, limit: int):
        self.operation = operation
        self.size = size
        self.limit = limit
        super().__init__(f"{operation}: size {size} exceeds limit {limit}")


# ============================================
# Colorings
# ============================================

class ColoringError(GrundyError):
    """Invalid coloring input."""


class PartialColoringError(ColoringError):
    def __init__(self, colored: int, n: int):
        super().__init__(f"coloring covers {colored} vertices, graph has {n}")


class InvalidPermutationError(ColoringError):
    """A vertex order is not a permutation of the graph's vertices."""


class NotGrundyError(ColoringError):
    """The coloring is not a Grundy coloring of the graph."""


class ColorClassError(ColoringError):
    def __init__(self, color: int, members: Sequence[int]):
        self.color = color
        self.members = list(members)
        super().__init__(
            f"color class {color} has {len(self.members)} vertices {self.members}; "
            "classes of a complement of a bipartite graph hold at most 2"
        )


# ============================================
# Edge sets
# ============================================

class EdgeSetError(GrundyError):
    """Invalid edge set input."""


class ForeignEdgeError(EdgeSetError):
    def __init__(self, edge: tuple, where: Optional[str] = None):
        self.edge = edge
        suffix = f" ({where})" if where else ""
        super().__init__(f"edge {edge} is not an edge of the graph{suffix}")


class NotMatchingError(EdgeSetError):
    """Two members of an edge set share an endpoint."""


class NotDominatingError(EdgeSetError):
    """Some edge of the graph is not dominated by the set."""


class ExtendedCliqueError(GrundyError):
    """An extended clique fails validation or references foreign members."""


# ============================================
# File formats
# ============================================

class ParseError(GrundyError):
    def __init__(self, reason: str, path: Optional[str] = None, line: Optional[int] = None):
        self.reason = reason
        self.path = path
        self.line = line
        where = path or "<input>"
        if line is not None:
            where = f"{where}:{line}"
        super().__init__(f"{where}: {reason}")
