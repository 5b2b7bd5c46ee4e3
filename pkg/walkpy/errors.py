"""Exception types raised by walkpy"""


class WalkpyError(Exception):
    """Base class for all walkpy errors"""


class GraphError(WalkpyError, ValueError):
    """Invalid graph input"""


class EmptyGraphError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class NodeIndexError(GraphError, IndexError):
    pass


class EdgeListFormatError(GraphError):
    """Malformed edge-list text

    Attributes
    ----------
    lineno : int or None
        1-based line number of the offending line
    """
    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = 'line ' + str(lineno) + ': ' + message
        super().__init__(message)
        self.lineno = lineno


class GraphKindError(GraphError):
    """Graph does not have the shape a closed form requires"""


class ConnectivityError(GraphError):
    """Random generator failed to produce a connected graph within its retry budget"""


class TargetError(WalkpyError, ValueError):
    """Start node, target node or target set arguments conflict"""


class OrderingError(WalkpyError, ValueError):
    pass


class HorizonMismatchError(WalkpyError, ValueError):
    pass


class SimulationError(WalkpyError, ValueError):
    pass


class CapExceededError(WalkpyError):
    """Exact inclusion-exclusion refused because the graph exceeds the node cap"""
