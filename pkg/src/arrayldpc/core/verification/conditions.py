"""Conditions a template instance must meet to describe a codeword or stopping set."""

from collections import Counter
from collections.abc import Iterable

from arrayldpc.models.result import VerificationMode
from arrayldpc.models.support import SupportMatrix
from arrayldpc.models.template import TemplateSupportMatrix


def _multiplicities_ok(counts: Iterable[int], mode: VerificationMode) -> bool:
    if mode == VerificationMode.CODEWORD:
        return all(c % 2 == 0 for c in counts)
    return all(c >= 2 for c in counts)


def check_multiplicities(inst: SupportMatrix, mode: VerificationMode = VerificationMode.CODEWORD) -> bool:
    """Every residue of every row occurs an even number of times (codeword) or at least twice (stopping set)."""
    return all(_multiplicities_ok(inst.row_multiplicities(j).values(), mode) for j in range(inst.m))


def symbolic_multiplicities(t: TemplateSupportMatrix, mode: VerificationMode = VerificationMode.CODEWORD) -> bool:
    """The multiplicity condition on the rational entries themselves, independent of q."""
    return all(_multiplicities_ok(Counter(t.row_values(j)).values(), mode) for j in range(t.m))


def odd_pair_condition(inst: SupportMatrix) -> bool:
    """At least two columns, distinct mod q, occur an odd number of times."""
    counts = Counter(inst.columns)
    return sum(1 for c in counts.values() if c % 2 == 1) >= 2


def reduce_duplicate_columns(inst: SupportMatrix) -> SupportMatrix:
    """Drop pairs of equal columns, keeping one copy of each odd-multiplicity column.

    Surviving columns keep their first-occurrence order; the result has no columns
    when every column cancels.
    """
    counts = Counter(inst.columns)
    seen = set()
    survivors = []
    for c in inst.columns:
        if counts[c] % 2 == 1 and c not in seen:
            survivors.append(c)
            seen.add(c)
    return inst.model_copy(update={"columns": tuple(survivors)})


def distinct_columns(inst: SupportMatrix) -> SupportMatrix:
    """One copy of every column, first-occurrence order."""
    return inst.model_copy(update={"columns": tuple(dict.fromkeys(inst.columns))})


def canonical_order_check(inst: SupportMatrix) -> bool:
    """Columns are sorted by (y, x), the order implied by the block structure of H."""
    keys = [c.sort_key() for c in inst.columns]
    return all(a <= b for a, b in zip(keys, keys[1:]))
