"""Exception hierarchy shared by the whole package."""


class LambdaPackError(Exception):
    """Base class for all errors raised by lambdapack."""


class GraphError(LambdaPackError, ValueError):
    """Malformed graph input or a reference to a missing vertex/edge."""


class PreconditionError(LambdaPackError, ValueError):
    """An operation was called on an input outside its contract."""


class OracleCapError(LambdaPackError):
    """The exact solver refuses inputs above its size cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"oracle cap: {n} vertices exceeds cap {cap}")
        self.n = n
        self.cap = cap


class InvalidPacking(LambdaPackError, ValueError):
    """A packing object violates its invariants in the host graph."""


class ConstructionFailure(LambdaPackError):
    """A constructive routine could not produce the object a theorem promises.

    This means either an implementation bug or a counterexample; the
    harness re-checks with the oracle to tell the two apart.
    """

    def __init__(self, message: str, graph=None, constraint=None):
        super().__init__(message)
        self.graph = graph
        self.constraint = constraint


class InternalAssertionError(LambdaPackError, AssertionError):
    """A structural invariant that must hold by construction was violated."""
