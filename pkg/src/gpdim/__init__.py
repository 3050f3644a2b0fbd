"""Exact metric-dimension toolkit for generalized Petersen graphs."""

__version__ = "0.1.0"

from .graph import (  # noqa: F401
    GPInstance,
    GPParams,
    DistanceOracle,
    ParameterDomainError,
    VertexRef,
    bfs_all_pairs,
    bfs_oracle,
    build_graph,
)
