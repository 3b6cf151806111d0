"""Shortest even holes: polynomial procedures plus brute-force oracles."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    Graph,
    Hole,
    PathTable,
    apsp,
    closed_neighborhood,
    induced_subgraph,
    is_induced_path,
    load_graph,
    render_graph,
    shortest_path,
    validate_hole,
)
from .pipeline import Status, Verdict, make_provider, shortest_even_hole  # noqa: E402

__all__ = [
    "Graph",
    "Hole",
    "PathTable",
    "Status",
    "Verdict",
    "apsp",
    "closed_neighborhood",
    "induced_subgraph",
    "is_induced_path",
    "load_graph",
    "make_provider",
    "render_graph",
    "shortest_even_hole",
    "shortest_path",
    "validate_hole",
]
