"""Factory for creating distance searcher instances."""

import logging
from typing import Any, Optional

from arrayldpc.core.distance.base import BaseDistanceSearcher
from arrayldpc.core.distance.branch_and_bound import CodewordBranchAndBound, StoppingSetBranchAndBound
from arrayldpc.core.distance.gray_enumerator import GrayCodeEnumerator
from arrayldpc.core.distance.information_set import InformationSetSearcher
from arrayldpc.core.interfaces import ConfigurationError
from arrayldpc.models.code import ArrayCode
from arrayldpc.models.config import ArrayLDPCConfig

logger = logging.getLogger(__name__)


class DistanceSearcherFactory:
    """Factory for creating the distance searcher suited to a code."""

    @staticmethod
    def create_searcher(
        kind: str = "auto",
        config: Optional[dict[str, Any]] = None,
        code: Optional[ArrayCode] = None,
    ) -> BaseDistanceSearcher:
        """Create a searcher instance.

        Args:
            kind: 'exact', 'stopping', 'codeword-bnb', 'heuristic' or 'auto'
            config: Configuration dictionary (the [distance] keys plus caps)
            code: Code to be searched; required for 'auto'

        Raises:
            ConfigurationError: If the kind is unknown or 'auto' has no code
        """
        config = config or {}

        if kind == "auto":
            if code is None:
                raise ConfigurationError("searcher kind 'auto' needs the code to choose")
            limit = int(config.get("enumeration_limit_bits", 26))
            if code.dimension <= limit:
                return GrayCodeEnumerator(config)
            logger.info(f"{code} has dimension {code.dimension} > {limit}; using the heuristic search")
            return InformationSetSearcher(config)

        elif kind == "exact":
            return GrayCodeEnumerator(config)

        elif kind == "stopping":
            return StoppingSetBranchAndBound(config)

        elif kind == "codeword-bnb":
            return CodewordBranchAndBound(config)

        elif kind == "heuristic":
            return InformationSetSearcher(config)

        else:
            raise ConfigurationError(f"Unknown searcher kind: {kind}")

    @staticmethod
    def create_from_config(
        config: ArrayLDPCConfig, kind: str = "auto", code: Optional[ArrayCode] = None, **overrides: Any
    ) -> BaseDistanceSearcher:
        """Create a searcher from the application config; non-None overrides win."""
        values: dict[str, Any] = config.distance.model_dump()
        values["max_expand_columns"] = config.code.max_expand_columns
        values.update({k: v for k, v in overrides.items() if v is not None})
        return DistanceSearcherFactory.create_searcher(kind, values, code)

    @staticmethod
    def get_available_kinds() -> list[str]:
        return ["auto", "exact", "stopping", "codeword-bnb", "heuristic"]
