"""Exception hierarchy for domlab."""


class DomlabError(Exception):
    """Base class for every error raised by domlab."""


# graph construction / queries
class LoopEdge(DomlabError, ValueError):
    pass


class EndpointOutOfRange(DomlabError, ValueError):
    pass


class EdgeNotInGraph(DomlabError, ValueError):
    pass


class ElementNotInGraph(DomlabError, ValueError):
    pass


class Disconnected(DomlabError, ValueError):
    pass


class EmptyGraph(DomlabError, ValueError):
    pass


class NoEdges(DomlabError, ValueError):
    pass


class TooSmall(DomlabError, ValueError):
    pass


class TooLarge(DomlabError, ValueError):
    pass


# solvers
class IsolatedVertex(DomlabError, ValueError):
    """Raised when a total-type domination number is requested for a graph with delta = 0."""


class BudgetExhausted(DomlabError, RuntimeError):
    def __init__(self, nodes: int):
        super().__init__(f"node budget exhausted after {nodes} search nodes")
        self.nodes = nodes


class EmptyResidual(DomlabError, ValueError):
    pass


# families and constructions
class InvalidParams(DomlabError, ValueError):
    pass


class UnsupportedFamily(DomlabError, ValueError):
    pass


class NotHamiltonianPath(DomlabError, ValueError):
    pass


class NotATree(DomlabError, ValueError):
    pass


class ConstructionFailed(DomlabError, RuntimeError):
    """The tree construction produced a set that is not a TMDS.

    The offending graph and candidate set are kept so the harness can archive them.
    """

    def __init__(self, message: str, graph=None, candidate=None):
        super().__init__(message)
        self.graph = graph
        self.candidate = candidate


# corpus runner
class CapExceeded(DomlabError, ValueError):
    pass


# parsing
class ParseError(DomlabError, ValueError):
    """Positioned parse error for edge-list documents."""

    def __init__(self, reason: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.reason = reason
        self.line = line
        self.column = column


class Graph6Error(DomlabError, ValueError):
    pass


class BadByte(Graph6Error):
    pass


class TruncatedBits(Graph6Error):
    pass
