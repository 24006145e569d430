"""Distinctness of template columns: per-row thresholds and exceptional primes."""

import logging
from fractions import Fraction
from itertools import combinations
from math import gcd

from sympy import primefactors

from arrayldpc.core.interfaces import DegenerateTemplateError
from arrayldpc.models.result import DistinctnessAnalysis, RowThreshold
from arrayldpc.models.template import TemplateSupportMatrix

logger = logging.getLogger(__name__)


def row_threshold(row: int, values: list[Fraction]) -> RowThreshold:
    """t = 2*lambda + mu from the integer and half-integer entries of one row."""
    lam = max((abs(v.numerator) for v in values if v.denominator == 1), default=0)
    mu = max((abs(v.numerator) for v in values if v.denominator == 2), default=0)
    return RowThreshold(
        row=row,
        lam=lam,
        mu=mu,
        threshold=2 * lam + mu,
        other_denominators=any(v.denominator > 2 for v in values),
    )


def collision_primes(t: TemplateSupportMatrix) -> list[int]:
    """Primes at which two distinct template columns become equal.

    Columns a and b coincide mod q iff q divides num_a*den_b - num_b*den_a in every row;
    the candidates are the prime divisors of the gcd of these differences.

    Raises:
        DegenerateTemplateError: If two columns are identical as rationals
    """
    columns = t.complete_columns()
    rows = [t.row_values(j) for j in range(t.m)]
    primes: set[int] = set()
    for a, b in combinations(range(len(columns)), 2):
        g = 0
        for values in rows:
            va, vb = values[a], values[b]
            g = gcd(g, va.numerator * vb.denominator - vb.numerator * va.denominator)
        if g == 0:
            raise DegenerateTemplateError(f"template columns {a} and {b} are identical: {columns[a]}")
        found = primefactors(g)
        if found:
            logger.debug(f"Columns {a} and {b} collide at primes {found}")
        primes.update(found)
    return sorted(primes)


def distinctness_analysis(t: TemplateSupportMatrix) -> DistinctnessAnalysis:
    """Per-row thresholds and the exact exceptional prime set of a complete template."""
    thresholds = [row_threshold(j, t.row_values(j)) for j in range(t.m)]
    return DistinctnessAnalysis(thresholds=thresholds, exceptional_primes=collision_primes(t))
