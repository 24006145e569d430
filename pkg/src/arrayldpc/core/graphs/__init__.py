"""Support-matrix graphs and graphical cycle structure."""

from arrayldpc.core.graphs.support_graph import (
    Cycle,
    SupportGraph,
    build_graph,
    cycle_lengths,
    cycles_through_edge,
    graph_to_dot,
    relaxed_structure_match,
    same_cycle_structure,
)

__all__ = [
    "Cycle",
    "SupportGraph",
    "build_graph",
    "cycle_lengths",
    "cycles_through_edge",
    "graph_to_dot",
    "relaxed_structure_match",
    "same_cycle_structure",
]
