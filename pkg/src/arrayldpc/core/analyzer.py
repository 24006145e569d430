"""Multi-(q, m) distance runs behind the distance table."""

import csv
import io
import logging
import time
from collections.abc import Iterable
from typing import Optional

from sympy import primerange

from arrayldpc.core.code import build_code, is_even_weight_code
from arrayldpc.core.distance import DistanceSearcherFactory, bracket, template_upper_bound
from arrayldpc.core.interfaces import BaseAnalyzer, MemoryGuardError
from arrayldpc.models.code import ArrayCode
from arrayldpc.models.config import ArrayLDPCConfig
from arrayldpc.models.result import DistanceKind, DistanceResult, DistanceTarget, TableRow

logger = logging.getLogger(__name__)

TABLE_COLUMNS: tuple[tuple[str, int, DistanceTarget], ...] = (
    ("d7", 7, DistanceTarget.MINIMUM),
    ("d6", 6, DistanceTarget.MINIMUM),
    ("h5", 5, DistanceTarget.STOPPING),
    ("d5", 5, DistanceTarget.MINIMUM),
    ("h4", 4, DistanceTarget.STOPPING),
    ("d4", 4, DistanceTarget.MINIMUM),
)


class ArrayCodeAnalyzer(BaseAnalyzer):
    """Runs the distance searches needed for table rows of several primes."""

    def __init__(self, config: Optional[ArrayLDPCConfig] = None):
        self.settings = config or ArrayLDPCConfig()
        super().__init__(self.settings.model_dump())

    def initialize(self) -> None:
        logger.info(
            f"Analyzer ready: enumeration limit 2^{self.settings.distance.enumeration_limit_bits}, "
            f"stopping cap {self.settings.distance.stopping_cap}"
        )

    def cleanup(self) -> None:
        logger.debug("Analyzer cleanup completed")

    def _search(self, kind: str, code: ArrayCode, **overrides: object) -> DistanceResult:
        searcher = DistanceSearcherFactory.create_from_config(self.settings, kind, code, **overrides)
        with searcher:
            return searcher.search(code)

    def _even_weight(self, code: ArrayCode) -> bool:
        try:
            return is_even_weight_code(code, self.settings.code.max_expand_columns)
        except MemoryGuardError:
            return False

    def minimum_distance_cell(self, code: ArrayCode) -> str:
        """Exact d(q, m) when enumerable, else the tightest bracket of the known bounds."""
        if code.dimension <= self.settings.distance.enumeration_limit_bits:
            return str(self._search("exact", code).value)

        uppers = [self._search("heuristic", code).value]
        template = template_upper_bound(code.m, code.q)
        if template is not None:
            uppers.append(template.value)
        upper = min(u for u in uppers if u)

        lower: Optional[int] = None
        cap = self.settings.table.lower_bound_cap
        if cap is not None:
            capped = self._search("codeword-bnb", code, weight_cap=cap)
            if capped.kind == DistanceKind.EXACT:
                return str(capped.value)
            lower = capped.value
        return bracket(lower, upper, self._even_weight(code))

    def stopping_distance_cell(self, code: ArrayCode) -> str:
        result = self._search("stopping", code)
        if result.kind == DistanceKind.EXACT:
            return str(result.value)
        return bracket(result.value, None)

    def table_row(self, q: int) -> TableRow:
        cells: dict[str, str] = {}
        for name, m, target in TABLE_COLUMNS:
            if m > q:
                cells[name] = "-"
                continue
            code = build_code(q, m)
            start = time.perf_counter()
            if target == DistanceTarget.MINIMUM:
                cells[name] = self.minimum_distance_cell(code)
            else:
                cells[name] = self.stopping_distance_cell(code)
            logger.info(f"{name}({q}) = {cells[name]} ({time.perf_counter() - start:.1f}s)")
        return TableRow(q=q, cells=cells)

    def build_table(self, qmax: int, qmin: Optional[int] = None) -> list[TableRow]:
        """Rows for every odd prime q in [qmin, qmax]."""
        self.ensure_initialized()
        low = max(3, qmin if qmin is not None else self.settings.table.qmin)
        return [self.table_row(int(q)) for q in primerange(low, qmax + 1)]


def build_table(qmax: int, qmin: int = 7, config: Optional[ArrayLDPCConfig] = None) -> list[TableRow]:
    analyzer = ArrayCodeAnalyzer(config)
    with analyzer:
        return analyzer.build_table(qmax, qmin)


def table_to_csv(rows: Iterable[TableRow]) -> str:
    """CSV text with header ``q,d7,d6,h5,d5,h4,d4``."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["q", *(name for name, _, _ in TABLE_COLUMNS)])
    for row in rows:
        writer.writerow([row.q, *(row.cells[name] for name, _, _ in TABLE_COLUMNS)])
    return buffer.getvalue()
