"""Exact minimum distance by Gray-code enumeration of all codewords."""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

from arrayldpc.core import gf2
from arrayldpc.core.code import generator_basis
from arrayldpc.core.distance.base import BaseDistanceSearcher
from arrayldpc.core.distance.branch_and_bound import CodewordBranchAndBound
from arrayldpc.core.interfaces import EnumerationLimitError
from arrayldpc.models.code import ArrayCode
from arrayldpc.models.result import DistanceKind, DistanceResult, DistanceTarget

logger = logging.getLogger(__name__)


def enumerate_coset(low_basis: list[int], offset: int) -> tuple[int, int, int]:
    """Lightest nonzero word of ``offset + span(low_basis)``.

    Consecutive words differ in one basis row, so each step is a single XOR.

    Returns:
        (weight, word, words_checked); weight is 0 when the coset holds only zero
    """
    best_w, best_cw = 0, 0
    cw = offset
    checked = 0
    if offset:
        checked = 1
        best_w, best_cw = offset.bit_count(), offset
    prev_gray = 0
    for t in range(1, 1 << len(low_basis)):
        gray = t ^ (t >> 1)
        diff = gray ^ prev_gray
        idx = (diff & -diff).bit_length() - 1
        cw ^= low_basis[idx]
        prev_gray = gray
        checked += 1
        w = cw.bit_count()
        if w and (best_w == 0 or w < best_w):
            best_w, best_cw = w, cw
    return best_w, best_cw, checked


def _partition(basis: list[int], threads: int) -> tuple[list[int], list[int]]:
    """Split off the top basis rows as a prefix; one coset offset per prefix value."""
    k = len(basis)
    p = min(max(threads, 1).bit_length() - 1, k)
    low, top = basis[: k - p], basis[k - p :]
    offsets = []
    for s in range(1 << p):
        offset = 0
        for i, v in enumerate(top):
            if (s >> i) & 1:
                offset ^= v
        offsets.append(offset)
    return low, offsets


class GrayCodeEnumerator(BaseDistanceSearcher):
    """Enumerates all 2^k codewords of a generator basis.

    Codes whose dimension exceeds ``enumeration_limit_bits`` are refused unless a
    ``weight_cap`` is given, in which case the capped codeword branch-and-bound runs
    instead.
    """

    target = DistanceTarget.MINIMUM

    def __init__(self, config: Optional[dict] = None):
        super().__init__(config)
        self.enumeration_limit_bits = int(self.config.get("enumeration_limit_bits", 26))
        self.hard_limit_bits = int(self.config.get("hard_limit_bits", 60))
        self.threads = int(self.config.get("threads", 1))
        cap = self.config.get("weight_cap")
        self.weight_cap: Optional[int] = int(cap) if cap is not None else None

    def _search_impl(self, code: ArrayCode) -> DistanceResult:
        k = code.dimension
        limit = min(self.enumeration_limit_bits, self.hard_limit_bits)
        if k > limit:
            if self.weight_cap is not None:
                logger.info(f"Dimension {k} above 2^{limit}; running capped branch-and-bound up to {self.weight_cap}")
                return CodewordBranchAndBound(self.config).search(code)
            raise EnumerationLimitError(
                f"{code} has dimension {k}, above the enumeration limit of {limit} bits; "
                "pass a weight cap or use the heuristic search"
            )

        basis = generator_basis(code, self.max_expand_columns)
        low, offsets = _partition(basis, self.threads)
        logger.debug(f"Enumerating 2^{k} codewords in {len(offsets)} partition(s)")
        if len(offsets) > 1:
            with ProcessPoolExecutor(max_workers=self.threads) as pool:
                parts = list(pool.map(enumerate_coset, [low] * len(offsets), offsets))
        else:
            parts = [enumerate_coset(low, offsets[0])]

        found = [(w, i, cw) for i, (w, cw, _) in enumerate(parts) if w]
        checked = sum(c for _, _, c in parts)
        effort = {"codewords": checked, "partitions": len(offsets)}
        if self.weight_cap is not None:
            effort["cap"] = self.weight_cap
        w, _, cw = min(found)
        return DistanceResult(
            q=code.q,
            m=code.m,
            target=self.target,
            kind=DistanceKind.EXACT,
            value=w,
            witness=gf2.bits(cw),
            method="gray-enumeration",
            effort=effort,
        )
