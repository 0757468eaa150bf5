"""Exception hierarchy shared by every module of the package."""


class GraphError(Exception):
    """Base class for all errors raised by colgraph."""


class VertexNotFoundError(GraphError, KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"vertex {self.vertex!r} is not in the graph"


class DuplicateVertexError(GraphError, ValueError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"vertex {self.vertex!r} already exists"


class InvalidVertexError(GraphError, ValueError):
    """A vertex id outside ``0 .. 2**31 - 1``."""


class EdgeNotFoundError(GraphError, KeyError):
    def __init__(self, source, target):
        super().__init__((source, target))
        self.source = source
        self.target = target

    def __str__(self):
        return f"edge {self.source}-{self.target} is not in the graph"


class KindViolationError(GraphError, ValueError):
    """An edge the graph kind does not allow."""


class DuplicateEdgeError(KindViolationError):
    def __init__(self, source, target):
        super().__init__(f"graph kind forbids multiple edges: {source}-{target} exists")
        self.source = source
        self.target = target


class SelfLoopError(KindViolationError):
    def __init__(self, vertex):
        super().__init__(f"graph kind forbids self-loops: {vertex}-{vertex}")
        self.vertex = vertex


class UnsupportedKindError(GraphError, TypeError):
    """The operation is not defined for this kind of graph."""


class StaleEdgeError(GraphError, LookupError):
    """An edge handle whose adjacency slot no longer holds that edge."""


class ConcurrentModificationError(GraphError, RuntimeError):
    """The graph was structurally modified behind an iterator's back."""


class NegativeWeightError(GraphError, ValueError):
    pass


class NegativeCycleError(GraphError):
    def __init__(self, cycle):
        super().__init__(f"negative cycle reachable from the source: {list(cycle)}")
        self.cycle = cycle


class NotBipartiteError(GraphError):
    def __init__(self, odd_cycle):
        super().__init__(f"graph is not bipartite, odd cycle: {list(odd_cycle)}")
        self.odd_cycle = odd_cycle


class NotAcyclicError(GraphError):
    def __init__(self, cycle):
        super().__init__(f"digraph contains a cycle: {list(cycle)}")
        self.cycle = cycle


class NotEulerianError(GraphError):
    pass
