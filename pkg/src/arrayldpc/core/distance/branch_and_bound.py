"""Iterative-deepening branch-and-bound over column subsets.

A partial set is extended only through columns that cover one of its deficient
check rows: rows met exactly once (stopping sets) or an odd number of times
(codewords). Column 0 is always in the set; the translations (x, y) -> (x+b, y+d)
are automorphisms acting transitively on columns.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import ClassVar, Optional

from arrayldpc.core.code import is_even_weight_code
from arrayldpc.core.distance.base import BaseDistanceSearcher
from arrayldpc.core.interfaces import InvalidParameterError, MemoryGuardError
from arrayldpc.models.code import ArrayCode
from arrayldpc.models.result import DistanceKind, DistanceResult, DistanceTarget

logger = logging.getLogger(__name__)


class SubsetSearch:
    """Depth-first search state for one code and one deficiency rule."""

    def __init__(self, q: int, m: int, parity: bool):
        self.q, self.m, self.parity = q, m, parity
        code = ArrayCode(q=q, m=m)
        n = q * q
        self.column_rows = [code.column_rows(c) for c in range(n)]
        self.row_columns: list[list[int]] = [[] for _ in range(q * m)]
        for c, rows in enumerate(self.column_rows):
            for r in rows:
                self.row_columns[r].append(c)
        self.counts = [0] * (q * m)
        self.in_set = bytearray(n)
        self.excluded = bytearray(n)
        self.chosen: list[int] = []
        self.deficient: set[int] = set()
        self.nodes = 0

    def _is_deficient(self, count: int) -> bool:
        return count % 2 == 1 if self.parity else count == 1

    def add(self, c: int) -> None:
        self.in_set[c] = 1
        self.chosen.append(c)
        for r in self.column_rows[c]:
            self.counts[r] += 1
            if self._is_deficient(self.counts[r]):
                self.deficient.add(r)
            else:
                self.deficient.discard(r)

    def remove(self, c: int) -> None:
        self.in_set[c] = 0
        self.chosen.pop()
        for r in self.column_rows[c]:
            self.counts[r] -= 1
            if self._is_deficient(self.counts[r]):
                self.deficient.add(r)
            else:
                self.deficient.discard(r)

    def candidates(self) -> Optional[list[int]]:
        """Columns that can fix the deficient row with the fewest of them, best first.

        Returns None when nothing is deficient, and an empty list at a dead end.
        """
        if not self.deficient:
            return None
        best_row, best = -1, None
        for r in self.deficient:
            cands = [c for c in self.row_columns[r] if not self.in_set[c] and not self.excluded[c]]
            if best is None or len(cands) < len(best) or (len(cands) == len(best) and r < best_row):
                best_row, best = r, cands
            if not cands:
                return []
        assert best is not None
        resolved = {c: sum(1 for r in self.column_rows[c] if r in self.deficient) for c in best}
        return sorted(best, key=lambda c: (-resolved[c], c))

    def dfs(self, bound: int) -> bool:
        """Extend the current set to a solution of size <= bound; the set is left at the solution."""
        self.nodes += 1
        cands = self.candidates()
        if cands is None:
            return True
        remaining = bound - len(self.chosen)
        if remaining <= 0 or -(-len(self.deficient) // self.m) > remaining:
            return False
        excluded_here = []
        found = False
        for c in cands:
            self.add(c)
            if self.dfs(bound):
                found = True
                break
            self.remove(c)
            self.excluded[c] = 1
            excluded_here.append(c)
        for c in excluded_here:
            self.excluded[c] = 0
        return found


def run_branch(
    q: int, m: int, parity: bool, bound: int, chosen: list[int], excluded: list[int]
) -> tuple[Optional[list[int]], int]:
    """Search below one fixed prefix; used by the worker processes."""
    search = SubsetSearch(q, m, parity)
    for c in chosen:
        search.add(c)
    for c in excluded:
        search.excluded[c] = 1
    if search.dfs(bound):
        return sorted(search.chosen), search.nodes
    return None, search.nodes


class SubsetBranchAndBound(BaseDistanceSearcher):
    """Smallest nonempty column set with no deficient row, up to a size cap."""

    parity: ClassVar[bool]
    cap_key: ClassVar[str]
    method: ClassVar[str]

    def __init__(self, config: Optional[dict] = None):
        super().__init__(config)
        self.threads = int(self.config.get("threads", 1))
        cap = self.config.get(self.cap_key)
        if cap is None:
            raise InvalidParameterError(f"{type(self).__name__} needs '{self.cap_key}'")
        self.size_cap = int(cap)
        if self.size_cap < 1:
            raise InvalidParameterError(f"size cap must be >= 1, got {self.size_cap}")

    def _search_impl(self, code: ArrayCode) -> DistanceResult:
        nodes = 0
        witness: Optional[list[int]] = None
        for bound in range(1, self.size_cap + 1):
            if self.threads > 1:
                witness, used = self._parallel_bound(code, bound)
            else:
                witness, used = run_branch(code.q, code.m, self.parity, bound, [0], [])
            nodes += used
            logger.debug(f"{code}: size bound {bound} explored {used} nodes")
            if witness is not None:
                break

        effort = {"cap": self.size_cap, "nodes": nodes}
        if witness is not None:
            return DistanceResult(
                q=code.q, m=code.m, target=self.target, kind=DistanceKind.EXACT,
                value=len(witness), witness=witness, method=self.method, effort=effort,
            )
        logger.info(f"No {self.target} witness of size <= {self.size_cap} in {code}")
        return DistanceResult(
            q=code.q, m=code.m, target=self.target, kind=DistanceKind.LOWER_BOUND,
            value=self._lower_bound(code), witness=None, method=self.method, effort=effort,
        )

    def _lower_bound(self, code: ArrayCode) -> int:
        return self.size_cap + 1

    def _parallel_bound(self, code: ArrayCode, bound: int) -> tuple[Optional[list[int]], int]:
        """Split at the first branching row; branch i excludes the columns of branches before it."""
        root = SubsetSearch(code.q, code.m, self.parity)
        root.add(0)
        cands = root.candidates()
        if cands is None:
            return [0], 1
        if bound < 2 or not cands:
            return None, 1
        tasks = [([0, c], cands[:i]) for i, c in enumerate(cands)]
        with ProcessPoolExecutor(max_workers=self.threads) as pool:
            futures = [
                pool.submit(run_branch, code.q, code.m, self.parity, bound, chosen, excluded)
                for chosen, excluded in tasks
            ]
            results = [f.result() for f in futures]
        nodes = 1 + sum(n for _, n in results)
        for witness, _ in results:
            if witness is not None:
                return witness, nodes
        return None, nodes


class StoppingSetBranchAndBound(SubsetBranchAndBound):
    """Exact stopping distance h(q, m) up to ``stopping_cap``."""

    target = DistanceTarget.STOPPING
    parity = False
    cap_key = "stopping_cap"
    method = "branch-and-bound"


class CodewordBranchAndBound(SubsetBranchAndBound):
    """Exact minimum distance up to ``weight_cap`` without enumerating the code."""

    target = DistanceTarget.MINIMUM
    parity = True
    cap_key = "weight_cap"
    method = "codeword-branch-and-bound"

    def _lower_bound(self, code: ArrayCode) -> int:
        bound = self.size_cap + 1
        try:
            even = is_even_weight_code(code, self.max_expand_columns)
        except MemoryGuardError:
            logger.warning(f"{code} too large to check even weight; lower bound not rounded")
            return bound
        if even and bound % 2:
            bound += 1
        return bound
