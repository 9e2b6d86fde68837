"""Maximum Λ-packings (vertex-disjoint 3-vertex paths) in claw-free graphs."""

from .errors import (
    ConstructionFailure,
    GraphError,
    InternalAssertionError,
    InvalidPacking,
    LambdaPackError,
    OracleCapError,
    PreconditionError,
)
from .graph import Graph, line_graph
from .oracle import has_lambda_factor, lambda_exact
from .packer import pack_2connected_clawfree, pack_any, pack_chain, pack_clawfree
from .packing import LambdaPacking, PackingConstraint

__all__ = [
    "ConstructionFailure",
    "Graph",
    "GraphError",
    "InternalAssertionError",
    "InvalidPacking",
    "LambdaPackError",
    "LambdaPacking",
    "OracleCapError",
    "PackingConstraint",
    "PreconditionError",
    "has_lambda_factor",
    "lambda_exact",
    "line_graph",
    "pack_2connected_clawfree",
    "pack_any",
    "pack_chain",
    "pack_clawfree",
]
