"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for every error raised by this package."""


class LoopEdgeError(GraphError):
    """An edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """The same edge appears more than once."""


class VertexOutOfRangeError(GraphError):
    """A vertex index is not in 0..n-1."""


class EdgeListFormatError(GraphError):
    """The edge-list text input is malformed."""


class DisconnectedError(GraphError):
    """The operation requires a connected graph."""


class NotATreeError(GraphError):
    """The operation requires a tree."""


class NotBipartiteError(GraphError):
    """The operation requires a bipartite graph."""


class NotPartialCubeError(GraphError):
    """The graph failed partial-cube verification."""


class ClassRemovalError(NotPartialCubeError):
    """Removing an edge class did not split the graph into two parts."""


class InfeasibleSpecError(GraphError):
    """Tree family parameters violate their feasibility constraints."""


class OrderTooLargeError(GraphError):
    """Requested enumeration order exceeds the supported bound."""
