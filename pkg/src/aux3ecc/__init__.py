"""3-edge-connected components of multigraphs with auxiliary subgraphs."""

from .decomposer import (INFINITY, Auxiliary, Component, Decomposition, Ear, InvariantViolation,
                         Original, WorkCounters, decompose)
from .graph import GraphError, Multigraph, connected_components, degree, from_edge_list

__all__ = [
    "INFINITY", "Auxiliary", "Component", "Decomposition", "Ear", "GraphError",
    "InvariantViolation", "Multigraph", "Original", "WorkCounters", "connected_components",
    "decompose", "degree", "from_edge_list",
]
__version__ = "0.1.0"
