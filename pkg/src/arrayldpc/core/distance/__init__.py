"""Minimum and stopping distance searches on array codes."""

from typing import Optional

from arrayldpc.core.distance.base import BaseDistanceSearcher
from arrayldpc.core.distance.bounds import bracket, template_upper_bound
from arrayldpc.core.distance.branch_and_bound import (
    CodewordBranchAndBound,
    StoppingSetBranchAndBound,
    SubsetSearch,
)
from arrayldpc.core.distance.factory import DistanceSearcherFactory
from arrayldpc.core.distance.gray_enumerator import GrayCodeEnumerator, enumerate_coset
from arrayldpc.core.distance.information_set import InformationSetSearcher
from arrayldpc.models.code import ArrayCode
from arrayldpc.models.config import ArrayLDPCConfig
from arrayldpc.models.result import DistanceResult


def _run(kind: str, code: ArrayCode, config: Optional[ArrayLDPCConfig], **overrides: object) -> DistanceResult:
    searcher = DistanceSearcherFactory.create_from_config(config or ArrayLDPCConfig(), kind, code, **overrides)
    with searcher:
        return searcher.search(code)


def exact_min_distance(
    code: ArrayCode, weight_cap: Optional[int] = None, config: Optional[ArrayLDPCConfig] = None
) -> DistanceResult:
    """Exact d(q, m) by enumeration; above the enumeration limit only with a weight cap."""
    return _run("exact", code, config, weight_cap=weight_cap)


def exact_stopping_distance(
    code: ArrayCode, size_cap: Optional[int] = None, config: Optional[ArrayLDPCConfig] = None
) -> DistanceResult:
    """Exact h(q, m) or the statement that no stopping set of size <= size_cap exists."""
    return _run("stopping", code, config, stopping_cap=size_cap)


def heuristic_low_weight_search(
    code: ArrayCode,
    budget: Optional[int] = None,
    seed: Optional[int] = None,
    config: Optional[ArrayLDPCConfig] = None,
) -> DistanceResult:
    return _run("heuristic", code, config, heuristic_budget=budget, heuristic_seed=seed)


__all__ = [
    "BaseDistanceSearcher",
    "CodewordBranchAndBound",
    "DistanceSearcherFactory",
    "GrayCodeEnumerator",
    "InformationSetSearcher",
    "StoppingSetBranchAndBound",
    "SubsetSearch",
    "bracket",
    "enumerate_coset",
    "exact_min_distance",
    "exact_stopping_distance",
    "heuristic_low_weight_search",
    "template_upper_bound",
]
