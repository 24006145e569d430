"""Template support matrix inference from two support matrices of the same shape.

Cycles through the designated edges of every G(i, j) are paired between the two
support matrices; walking a cycle pair edge by edge identifies one column on each
side, whose (x, y) are solved mod q1 and mod q2 and lifted to the simplest rational
agreeing with both. The walk continues within the current cycle pair, and pairs are
scheduled unambiguous groups first, then by increasing cycle length. A failed pairing
is undone and the next equal-length candidate tried.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Union

from arrayldpc.core.graphs import (
    Cycle,
    SupportGraph,
    build_graph,
    cycles_through_edge,
    relaxed_structure_match,
    same_cycle_structure,
)
from arrayldpc.core.graphs.support_graph import EdgeKind
from arrayldpc.core.interfaces import (
    AmbiguousMatchError,
    IncompleteTemplateError,
    InferenceBudgetError,
    InferenceError,
    InferenceInconsistentError,
    PreconditionError,
    StructureMismatchError,
)
from arrayldpc.core.template.solver import simplest_crt_solution, solve_column_pair
from arrayldpc.models.support import SupportMatrix
from arrayldpc.models.template import (
    ColumnPermutation,
    InferenceConfig,
    InferenceResult,
    TemplateColumn,
    TemplateSupportMatrix,
)

logger = logging.getLogger(__name__)

GroupKey = tuple[int, int, str, int]


@dataclass(frozen=True)
class _Slot:
    """One G1 cycle with its equal-length G2 candidates."""

    group: GroupKey
    cycle: Cycle
    candidates: tuple[Cycle, ...]
    ambiguous: bool


@dataclass
class _State:
    columns: list[Optional[TemplateColumn]]
    pi: dict[int, int] = field(default_factory=dict)
    pi_inverse: dict[int, int] = field(default_factory=dict)
    used: frozenset[tuple[GroupKey, int]] = frozenset()

    def copy(self) -> "_State":
        return _State(list(self.columns), dict(self.pi), dict(self.pi_inverse), self.used)

    @property
    def filled(self) -> int:
        return sum(c is not None for c in self.columns)

    def is_complete(self) -> bool:
        return all(c is not None for c in self.columns)


class TemplateInferrer:
    """Infers a template from support matrices at primes q1 < q2."""

    def __init__(self, config: Optional[InferenceConfig] = None):
        self.config = config or InferenceConfig()
        self.backtracks = 0
        self.last_error: Optional[InferenceError] = None
        self._best = _State(columns=[])

    def infer(self, sm1: SupportMatrix, sm2: SupportMatrix) -> InferenceResult:
        """Run inference.

        Returns:
            The complete template (q0 unset) and the permutation pi from sm2 columns to
            template columns

        Raises:
            PreconditionError: If q1 >= q2 or an input is not normalized
            StructureMismatchError: If m/w differ or the cycle structures do not match
            InferenceInconsistentError, AmbiguousMatchError, IncompleteTemplateError,
            InferenceBudgetError: If no complete consistent template is found
        """
        self._check_inputs(sm1, sm2)
        bound = self.config.bound_for(sm1.m)
        logger.info(
            f"Inferring template from q1={sm1.q}, q2={sm2.q} (m={sm1.m}, w={sm1.w}, I={bound}, "
            f"{'relaxed' if self.config.relaxed else 'strict'} matching)"
        )
        graphs = {
            (i, j): (build_graph(sm1, i, j), build_graph(sm2, i, j)) for i, j in combinations(range(sm1.m), 2)
        }
        slots = self._collect_slots(graphs)
        logger.debug(f"{len(slots)} cycle slots scheduled")

        state, used_slots = self._search(slots, graphs, sm1, sm2, bound)
        if state is None:
            if self.last_error is not None and not self.config.relaxed:
                raise self.last_error
            raise IncompleteTemplateError([a for a, c in enumerate(self._best.columns) if c is None])

        template = TemplateSupportMatrix(m=sm1.m, w=sm1.w, q0=None, columns=tuple(state.columns))
        logger.info(f"Template complete after {used_slots} cycle pairs, {self.backtracks} backtracks")
        return InferenceResult(
            template=template,
            permutation=ColumnPermutation(mapping=dict(sorted(state.pi.items()))),
            slots_used=used_slots,
            backtracks=self.backtracks,
        )

    def _check_inputs(self, sm1: SupportMatrix, sm2: SupportMatrix) -> None:
        if sm1.q >= sm2.q:
            raise PreconditionError(f"need q1 < q2, got q1={sm1.q}, q2={sm2.q}")
        if sm1.m != sm2.m or sm1.w != sm2.w:
            raise StructureMismatchError(f"shapes differ: m={sm1.m}, w={sm1.w} vs m={sm2.m}, w={sm2.w}")
        for name, sm in (("first", sm1), ("second", sm2)):
            if not sm.is_normalized():
                raise PreconditionError(f"{name} support matrix (q={sm.q}) is not normalized")
        limit = self.config.max_cycles_per_edge
        if self.config.relaxed:
            if not relaxed_structure_match(sm1, sm2, limit):
                raise StructureMismatchError("minimum cycle lengths through the designated edges differ")
        elif not same_cycle_structure(sm1, sm2, limit):
            raise StructureMismatchError("graphical cycle structures differ; try relaxed matching")

    def _collect_slots(self, graphs: dict[tuple[int, int], tuple[SupportGraph, SupportGraph]]) -> list[_Slot]:
        slots: list[_Slot] = []
        limit = self.config.max_cycles_per_edge
        kinds: tuple[EdgeKind, ...] = ("canonical", "zero")
        for (i, j), (g1, g2) in graphs.items():
            for kind in kinds:
                by_len1: dict[int, list[Cycle]] = defaultdict(list)
                by_len2: dict[int, list[Cycle]] = defaultdict(list)
                for c in cycles_through_edge(g1, g1.designated_edge(kind), limit):
                    by_len1[c.length].append(c)
                for c in cycles_through_edge(g2, g2.designated_edge(kind), limit):
                    by_len2[c.length].append(c)
                for length in sorted(set(by_len1) & set(by_len2)):
                    group = (i, j, kind, length)
                    ambiguous = len(by_len1[length]) > 1 or len(by_len2[length]) > 1
                    for c1 in by_len1[length]:
                        slots.append(_Slot(group, c1, tuple(by_len2[length]), ambiguous))
        slots.sort(key=lambda s: (s.ambiguous, s.group[3], s.group[0], s.group[1], s.group[2] != "canonical"))
        return slots

    def _search(
        self,
        slots: list[_Slot],
        graphs: dict[tuple[int, int], tuple[SupportGraph, SupportGraph]],
        sm1: SupportMatrix,
        sm2: SupportMatrix,
        bound: int,
    ) -> tuple[Optional[_State], int]:
        state = _State(columns=[None] * sm1.w)
        self._best = state
        stack: list[tuple[int, int, _State]] = []
        k, choice = 0, 0
        while True:
            if state.is_complete():
                return state, len(stack)
            if state.filled > self._best.filled:
                self._best = state
            advanced = False
            if k < len(slots):
                slot = slots[k]
                options: list[Union[int, None]] = list(range(len(slot.candidates)))
                if self.config.relaxed:
                    options.append(None)
                while choice < len(options):
                    option = options[choice]
                    choice += 1
                    if option is None:
                        logger.debug(f"Skipping slot {slot.group} cycle {slot.cycle}")
                        stack.append((k, choice, state))
                        k, choice, advanced = k + 1, 0, True
                        break
                    if (slot.group, option) in state.used:
                        continue
                    g1, g2 = graphs[(slot.group[0], slot.group[1])]
                    try:
                        new_state = self._apply(state, slot, option, g1, g2, sm1.q, sm2.q, bound)
                    except (InferenceInconsistentError, AmbiguousMatchError) as e:
                        logger.debug(f"Pairing {slot.cycle} with {slot.candidates[option]} failed: {e}")
                        self.last_error = e
                        continue
                    stack.append((k, choice, state))
                    state = new_state
                    k, choice, advanced = k + 1, 0, True
                    break
            if advanced:
                continue
            if not stack:
                return None, 0
            self.backtracks += 1
            if self.backtracks > self.config.max_backtracks:
                raise InferenceBudgetError(f"gave up after {self.config.max_backtracks} backtracks")
            k, choice, state = stack.pop()

    def _apply(
        self,
        state: _State,
        slot: _Slot,
        option: int,
        g1: SupportGraph,
        g2: SupportGraph,
        q1: int,
        q2: int,
        bound: int,
    ) -> _State:
        c1, c2 = slot.cycle, slot.candidates[option]
        new = state.copy()
        new.used = state.used | {(slot.group, option)}
        for r in range(c1.length):
            gamma, delta = c1.row_of(r), c1.row_of(r + 1)
            a = self._realizing_column(g1, c1, r)
            b = self._realizing_column(g2, c2, r)
            x1, y1 = solve_column_pair(c1.labels[r], c1.labels[r + 1], gamma, delta, q1)
            x2, y2 = solve_column_pair(c2.labels[r], c2.labels[r + 1], gamma, delta, q2)
            column = TemplateColumn(
                x=simplest_crt_solution(x1, q1, x2, q2, bound),
                y=simplest_crt_solution(y1, q1, y2, q2, bound),
            )
            existing = new.columns[a]
            if existing is not None and existing != column:
                raise InferenceInconsistentError(a, f"already {existing}, cycle step gives {column}")
            if b in new.pi and new.pi[b] != a:
                raise InferenceInconsistentError(a, f"second-matrix column {b} is already matched to {new.pi[b]}")
            if a in new.pi_inverse and new.pi_inverse[a] != b:
                raise InferenceInconsistentError(a, f"already matched to second-matrix column {new.pi_inverse[a]}")
            if existing is None:
                logger.debug(f"x_{a}, y_{a} = {column}; pi({b}) = {a}")
            new.columns[a] = column
            new.pi[b] = a
            new.pi_inverse[a] = b
        return new

    @staticmethod
    def _realizing_column(g: SupportGraph, cycle: Cycle, r: int) -> int:
        u, v = cycle.labels[r], cycle.labels[r + 1]
        a, b = (u, v) if r % 2 == 0 else (v, u)
        columns = g.edge_columns(a, b)
        if len(columns) != 1:
            raise AmbiguousMatchError(
                f"edge ({g.i}:{a}, {g.j}:{b}) of q={g.q} is realized by columns {columns}"
            )
        return columns[0]


def infer_template(
    sm1: SupportMatrix, sm2: SupportMatrix, config: Optional[InferenceConfig] = None
) -> tuple[TemplateSupportMatrix, ColumnPermutation]:
    """Infer a template and the column permutation pi from support matrices at q1 < q2."""
    result = TemplateInferrer(config).infer(sm1, sm2)
    return result.template, result.permutation
