"""Randomized information-set search for low-weight codewords."""

import logging
from collections.abc import Iterator
from itertools import combinations
from typing import Optional

import numpy as np

from arrayldpc.core import gf2
from arrayldpc.core.code import generator_basis
from arrayldpc.core.distance.base import BaseDistanceSearcher
from arrayldpc.core.interfaces import InvalidParameterError
from arrayldpc.models.code import ArrayCode
from arrayldpc.models.result import DistanceKind, DistanceResult, DistanceTarget

logger = logging.getLogger(__name__)


def low_weight_patterns(systematic: list[int], window: int) -> Iterator[int]:
    """XORs of 1 and 2 systematic rows, then of 3 rows among the first ``window``."""
    yield from systematic
    for a, b in combinations(systematic, 2):
        yield a ^ b
    for a, b, c in combinations(systematic[:window], 3):
        yield a ^ b ^ c


class InformationSetSearcher(BaseDistanceSearcher):
    """Upper bound on d(q, m) from random information sets.

    Each round permutes the columns, brings the generator to systematic form on the
    first independent columns of the permutation and scans information patterns of
    weight 1 to 3. The budget counts candidate codewords; results are deterministic for
    a fixed seed.
    """

    target = DistanceTarget.MINIMUM

    def __init__(self, config: Optional[dict] = None):
        super().__init__(config)
        self.budget = int(self.config.get("heuristic_budget", 100_000))
        self.seed = int(self.config.get("heuristic_seed", 2012))
        self.window = int(self.config.get("weight3_window", 24))
        if self.budget < 1:
            raise InvalidParameterError(f"budget must be >= 1, got {self.budget}")

    def _search_impl(self, code: ArrayCode) -> DistanceResult:
        basis = generator_basis(code, self.max_expand_columns)
        n = code.length
        rng = np.random.default_rng(self.seed)
        best_w, best_cw = 0, 0
        checked = rounds = 0
        while checked < self.budget:
            rounds += 1
            order = rng.permutation(n).tolist()
            systematic, _ = gf2.rref(basis, n, pivot_order=order)
            for cw in low_weight_patterns(systematic, self.window):
                checked += 1
                w = cw.bit_count()
                if w and (best_w == 0 or w < best_w):
                    best_w, best_cw = w, cw
                    logger.debug(f"Round {rounds}: weight {w} after {checked} candidates")
                if checked >= self.budget:
                    break

        return DistanceResult(
            q=code.q,
            m=code.m,
            target=self.target,
            kind=DistanceKind.UPPER_BOUND,
            value=best_w,
            witness=gf2.bits(best_cw),
            method="information-set",
            effort={"budget": self.budget, "seed": self.seed, "candidates": checked, "rounds": rounds},
        )
