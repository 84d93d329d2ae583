"""Spectral and minor-theoretic verification toolkit for small graphs."""

from minorspec.graphs import (
    CapacityError,
    Graph,
    add_edge,
    complement,
    complete,
    complete_bipartite,
    components,
    contract_edge,
    degree_sequence,
    delete_edge,
    from_graph6,
    induced,
    is_connected,
    join,
    k_copies,
    subdivide_min_edge,
    to_graph6,
    union,
)

__all__ = [
    "CapacityError",
    "Graph",
    "add_edge",
    "complement",
    "complete",
    "complete_bipartite",
    "components",
    "contract_edge",
    "degree_sequence",
    "delete_edge",
    "from_graph6",
    "induced",
    "is_connected",
    "join",
    "k_copies",
    "subdivide_min_edge",
    "to_graph6",
    "union",
]
