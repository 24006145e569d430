"""Base distance searcher with witness re-validation."""

import logging
import time
from abc import ABC, abstractmethod
from typing import Any, ClassVar, Optional

from arrayldpc.core.code import is_stopping_set, syndrome_zero
from arrayldpc.core.interfaces import BaseAnalyzer, VerificationError
from arrayldpc.models.code import ArrayCode
from arrayldpc.models.result import DistanceResult, DistanceTarget

logger = logging.getLogger(__name__)


class BaseDistanceSearcher(BaseAnalyzer, ABC):
    """Base class for minimum and stopping distance searches.

    ``search`` never returns a witness that does not re-validate against the code.
    """

    target: ClassVar[DistanceTarget]

    def __init__(self, config: Optional[dict[str, Any]] = None):
        super().__init__(config)
        self.max_expand_columns = int(self.config.get("max_expand_columns", 10_000))

    def initialize(self) -> None:
        logger.debug(f"{type(self).__name__} initialized")

    def cleanup(self) -> None:
        pass

    def search(self, code: ArrayCode) -> DistanceResult:
        """Run the search and re-validate its witness.

        Raises:
            VerificationError: If the returned witness does not re-validate
        """
        self.ensure_initialized()
        logger.info(f"{type(self).__name__} on {code} (dimension {code.dimension})")
        start = time.perf_counter()
        result = self._search_impl(code)
        result.effort.setdefault("seconds", round(time.perf_counter() - start, 3))
        self._revalidate(code, result)
        logger.info(f"{result.target} distance of {code}: {result.kind} {result.value} via {result.method}")
        return result

    @abstractmethod
    def _search_impl(self, code: ArrayCode) -> DistanceResult:
        """Implementation-specific search."""

    def _revalidate(self, code: ArrayCode, result: DistanceResult) -> None:
        if result.witness is None:
            return
        if not result.witness:
            raise VerificationError(f"{type(self).__name__} returned an empty witness for {code}")
        if len(set(result.witness)) != result.value:
            raise VerificationError(f"witness size {len(set(result.witness))} differs from value {result.value}")
        if result.target == DistanceTarget.MINIMUM:
            ok = syndrome_zero(code, result.witness)
        else:
            ok = is_stopping_set(code, result.witness)
        if not ok:
            raise VerificationError(f"witness {result.witness} is not a {result.target} witness of {code}")
