"""Bipartite support-matrix graphs G(i, j) and cycles through designated edges."""

import logging
from collections import Counter
from itertools import combinations, islice
from typing import Literal, Optional

import networkx as nx
from pydantic import BaseModel, ConfigDict

from arrayldpc.core.interfaces import (
    CycleOverflowError,
    InvalidParameterError,
    MissingEdgeError,
    PreconditionError,
    StructureMismatchError,
)
from arrayldpc.models.support import SupportMatrix

logger = logging.getLogger(__name__)

DEFAULT_MAX_CYCLES = 1_000_000

EdgeKind = Literal["canonical", "zero"]
Vertex = tuple[int, int]


class Cycle(BaseModel):
    """Simple cycle (a0, b1, a2, ..., a0) alternating between row i and row j labels."""

    model_config = ConfigDict(frozen=True)

    i: int
    j: int
    labels: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.labels) - 1

    def row_of(self, r: int) -> int:
        """Row of the r-th vertex: even positions are in row i, odd in row j."""
        return self.i if r % 2 == 0 else self.j

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.labels) + ")"


class SupportGraph:
    """G(i, j): left vertices are the distinct row-i entries, right vertices the row-j entries.

    Nodes are ``(row, value)`` tuples. Each edge carries the list of column positions
    realizing it under the ``columns`` attribute; duplicate columns raise the multiplicity
    of one simple edge.
    """

    def __init__(self, sm: SupportMatrix, i: int, j: int):
        if not 0 <= i < j < sm.m:
            raise InvalidParameterError(f"need 0 <= i < j < m={sm.m}, got ({i}, {j})")
        self.i = i
        self.j = j
        self.q = sm.q
        self.graph = nx.Graph()
        row_i, row_j = sm.row(i), sm.row(j)
        for col, (a, b) in enumerate(zip(row_i, row_j)):
            u, v = (i, a), (j, b)
            self.graph.add_node(u, bipartite=0)
            self.graph.add_node(v, bipartite=1)
            if self.graph.has_edge(u, v):
                self.graph.edges[u, v]["columns"].append(col)
            else:
                self.graph.add_edge(u, v, columns=[col])

    @property
    def left(self) -> list[int]:
        return sorted(value for row, value in self.graph.nodes if row == self.i)

    @property
    def right(self) -> list[int]:
        return sorted(value for row, value in self.graph.nodes if row == self.j)

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.graph.has_edge((self.i, a), (self.j, b)))

    def edge_columns(self, a: int, b: int) -> list[int]:
        """Column positions realizing edge (a in row i, b in row j)."""
        if not self.has_edge(a, b):
            raise MissingEdgeError(f"edge ({self.i}:{a}, {self.j}:{b}) not in G({self.i},{self.j})")
        return list(self.graph.edges[(self.i, a), (self.j, b)]["columns"])

    def multiplicity(self, a: int, b: int) -> int:
        return len(self.edge_columns(a, b))

    def degree(self, row: int, value: int) -> int:
        return int(self.graph.degree[(row, value)])

    def designated_edge(self, kind: EdgeKind) -> tuple[int, int]:
        """Edge realized by column (q-1, 1) ("canonical") or by column (0, 0) ("zero")."""
        if kind == "zero":
            return (0, 0)
        return ((self.q - 1 + self.i) % self.q, (self.q - 1 + self.j) % self.q)

    def to_dot(self) -> str:
        """DOT text with vertex labels "i:a" and edges labelled by their columns."""
        lines = [f'graph "G({self.i},{self.j})" {{']
        for row, value in sorted(self.graph.nodes):
            side = "left" if row == self.i else "right"
            lines.append(f'  "{row}:{value}" [group={side}];')
        for u, v, data in sorted(self.graph.edges(data=True), key=lambda e: (min(e[0], e[1]), max(e[0], e[1]))):
            a, b = (u, v) if u[0] == self.i else (v, u)
            label = ",".join(str(c) for c in data["columns"])
            lines.append(f'  "{a[0]}:{a[1]}" -- "{b[0]}:{b[1]}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(sm: SupportMatrix, i: int, j: int) -> SupportGraph:
    return SupportGraph(sm, i, j)


def graph_to_dot(g: SupportGraph) -> str:
    return g.to_dot()


def cycles_through_edge(
    g: SupportGraph, edge: tuple[int, int], max_cycles: int = DEFAULT_MAX_CYCLES
) -> list[Cycle]:
    """All simple cycles containing ``edge`` = (a in row i, b in row j).

    Each cycle starts at the edge's left vertex and traverses the edge first; the list is
    ordered by length, then by label sequence.

    Raises:
        MissingEdgeError: If the edge is not in the graph
        CycleOverflowError: If more than ``max_cycles`` cycles exist
    """
    a, b = edge
    u, v = (g.i, a), (g.j, b)
    if not g.graph.has_edge(u, v):
        raise MissingEdgeError(f"edge ({g.i}:{a}, {g.j}:{b}) not in G({g.i},{g.j})")
    rest = g.graph.copy()
    rest.remove_edge(u, v)
    paths = list(islice(nx.all_simple_paths(rest, source=v, target=u), max_cycles + 1))
    if len(paths) > max_cycles:
        raise CycleOverflowError(f"more than {max_cycles} cycles through ({g.i}:{a}, {g.j}:{b})")
    cycles = [Cycle(i=g.i, j=g.j, labels=(a,) + tuple(node[1] for node in path)) for path in paths]
    cycles.sort(key=lambda c: (c.length, c.labels))
    logger.debug(f"G({g.i},{g.j}) edge ({a},{b}): {len(cycles)} cycles")
    return cycles


def _check_comparable(sm1: SupportMatrix, sm2: SupportMatrix) -> None:
    if sm1.m != sm2.m or sm1.w != sm2.w:
        raise StructureMismatchError(f"cannot compare m={sm1.m}, w={sm1.w} with m={sm2.m}, w={sm2.w}")
    for name, sm in (("first", sm1), ("second", sm2)):
        if not sm.is_normalized():
            raise PreconditionError(f"{name} support matrix (q={sm.q}) lacks the canonical columns (0,0), (q-1,1)")


def cycle_lengths(sm: SupportMatrix, i: int, j: int, kind: EdgeKind, max_cycles: int = DEFAULT_MAX_CYCLES) -> list[int]:
    """Sorted lengths of the cycles through a designated edge of G(i, j)."""
    g = build_graph(sm, i, j)
    return [c.length for c in cycles_through_edge(g, g.designated_edge(kind), max_cycles)]


def same_cycle_structure(sm1: SupportMatrix, sm2: SupportMatrix, max_cycles: int = DEFAULT_MAX_CYCLES) -> bool:
    """Strict graphical cycle structure equality over all row pairs and both designated edges."""
    _check_comparable(sm1, sm2)
    for i, j in combinations(range(sm1.m), 2):
        for kind in ("canonical", "zero"):
            l1 = cycle_lengths(sm1, i, j, kind, max_cycles)
            l2 = cycle_lengths(sm2, i, j, kind, max_cycles)
            if Counter(l1) != Counter(l2):
                logger.info(f"Cycle structure differs at G({i},{j}) {kind} edge: {l1} vs {l2}")
                return False
    return True


def _min_length(lengths: list[int]) -> Optional[int]:
    return min(lengths) if lengths else None


def relaxed_structure_match(sm1: SupportMatrix, sm2: SupportMatrix, max_cycles: int = DEFAULT_MAX_CYCLES) -> bool:
    """Only the minimum cycle length through each designated edge has to agree."""
    _check_comparable(sm1, sm2)
    for i, j in combinations(range(sm1.m), 2):
        for kind in ("canonical", "zero"):
            m1 = _min_length(cycle_lengths(sm1, i, j, kind, max_cycles))
            m2 = _min_length(cycle_lengths(sm2, i, j, kind, max_cycles))
            if m1 != m2:
                logger.info(f"Minimum cycle length differs at G({i},{j}) {kind} edge: {m1} vs {m2}")
                return False
    return True
