"""Exception types shared across the package."""


class GcurvError(Exception):
    """Base class for all package specific errors."""


class SelfLoopError(GcurvError):
    def __init__(self, u: int):
        self.vertex = u
        super().__init__(f"self loop at vertex {u}")


class DuplicateEdgeError(GcurvError):
    def __init__(self, u: int, v: int):
        self.edge = (u, v)
        super().__init__(f"duplicate edge ({u}, {v})")


class DisconnectedError(GcurvError):
    """Raised when a connected graph is required.

    Carries two vertex components as a witness when available.
    """

    def __init__(self, components=None):
        self.components = components
        if components:
            a, b = components[0], components[1]
            msg = f"graph is disconnected: component {sorted(a)[:8]}... vs {sorted(b)[:8]}..."
        else:
            msg = "graph is disconnected"
        super().__init__(msg)


class NotAdjacentError(GcurvError):
    def __init__(self, x: int, y: int):
        self.pair = (x, y)
        super().__init__(f"vertices {x} and {y} are not adjacent")


class SameVertexError(GcurvError):
    def __init__(self, x: int):
        self.vertex = x
        super().__init__(f"vertex pair ({x}, {x}) is degenerate")


class SupportTooLargeError(GcurvError):
    def __init__(self, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"optimization support has {size} vertices, limit is {limit}")


class NoConvergenceError(GcurvError):
    pass


class NotDistanceRegularError(GcurvError):
    def __init__(self, witness=None):
        self.witness = witness
        super().__init__(f"graph is not distance regular (witness {witness})")


class NotParallelError(GcurvError):
    def __init__(self, e1, e2):
        self.pair = (e1, e2)
        super().__init__(f"edges {e1} and {e2} are not parallel")


class NotReflectiveError(GcurvError):
    def __init__(self, edge=None):
        self.edge = edge
        super().__init__(f"graph admits no reflection for edge {edge}")


class InvalidParameterError(GcurvError):
    pass


class TrivialGraphError(GcurvError):
    pass


class FactorizationFailedError(GcurvError):
    """Internal inconsistency: no grouping of relation components verified."""


class DegenerateFormError(GcurvError):
    pass


class NonpositiveCurvatureError(GcurvError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"minimum curvature {value} is not positive")


class ParseError(GcurvError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class InternalCheckError(GcurvError):
    """A self verification inside an algorithm failed; indicates a bug."""
