"""Construction of C(q, m) and membership tests on its parity-check matrix."""

import logging
from collections import Counter
from collections.abc import Iterable

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, ValidationError

from arrayldpc.core import gf2
from arrayldpc.core.interfaces import InvalidParameterError, MemoryGuardError, VerificationError
from arrayldpc.models.code import ArrayCode, ColumnXY

logger = logging.getLogger(__name__)

DEFAULT_MAX_COLUMNS = 10_000


class ParityCheckMatrix(BaseModel):
    """Expanded binary H(q, m): qm bit-packed rows over q^2 columns."""

    model_config = ConfigDict(frozen=True)

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]
    rank: int

    def to_dense(self) -> npt.NDArray[np.uint8]:
        return gf2.to_dense(self.rows, self.n_cols)

    def column_support(self, col: int) -> list[int]:
        """Row indices where column ``col`` has a one."""
        return [r for r, row in enumerate(self.rows) if (row >> col) & 1]

    def row_support(self, r: int) -> list[int]:
        return gf2.bits(self.rows[r])


def build_code(q: int, m: int) -> ArrayCode:
    """Code descriptor for C(q, m); no dense matrix is materialized.

    Raises:
        InvalidParameterError: If q is not an odd prime or m is outside [1, q]
    """
    try:
        code = ArrayCode(q=q, m=m)
    except ValidationError as e:
        raise InvalidParameterError(f"invalid code parameters q={q}, m={m}: {e.errors()[0]['msg']}") from e
    logger.debug(f"Built {code}: length {code.length}, dimension {code.dimension}")
    return code


def column_entries(c: ColumnXY, q: int, m: int) -> tuple[int, ...]:
    """Residues (x, x+y, ..., x+(m-1)y) mod q."""
    return tuple((c.x + j * c.y) % q for j in range(m))


def _expanded_rows(code: ArrayCode) -> list[int]:
    q, m = code.q, code.m
    rows = [0] * (q * m)
    for y in range(q):
        for x in range(q):
            bit = 1 << (y * q + x)
            for j in range(m):
                rows[j * q + (x + j * y) % q] |= bit
    return rows


def expand_parity_check(code: ArrayCode, max_columns: int = DEFAULT_MAX_COLUMNS) -> ParityCheckMatrix:
    """Binary qm x q^2 parity-check matrix with its GF(2) rank.

    Bit (j*q + r, y*q + x) is set iff r = x + j*y mod q. The result is cached on the code.

    Raises:
        MemoryGuardError: If q^2 exceeds ``max_columns``
    """
    if code.length > max_columns:
        raise MemoryGuardError(
            f"{code} has {code.length} columns, above the expansion cap of {max_columns}; "
            "raise code.max_expand_columns to allow it"
        )

    def _build() -> ParityCheckMatrix:
        rows = _expanded_rows(code)
        computed = gf2.rank(rows, code.length)
        if computed != code.rank:
            raise VerificationError(f"{code}: GF(2) rank {computed} differs from qm-m+1 = {code.rank}")
        logger.debug(f"Expanded {code}: {len(rows)}x{code.length}, rank {computed}")
        return ParityCheckMatrix(n_rows=len(rows), n_cols=code.length, rows=tuple(rows), rank=computed)

    return code.cached("parity_check", _build)


def generator_basis(code: ArrayCode, max_columns: int = DEFAULT_MAX_COLUMNS) -> list[int]:
    """Basis of the code (GF(2) null space of H), one bit-packed codeword per row."""
    h = expand_parity_check(code, max_columns)

    def _build() -> list[int]:
        basis = gf2.nullspace_basis(h.rows, h.n_cols)
        if len(basis) != code.dimension:
            raise VerificationError(f"{code}: null space has dimension {len(basis)}, expected {code.dimension}")
        return basis

    return list(code.cached("generator_basis", _build))


def is_even_weight_code(code: ArrayCode, max_columns: int = DEFAULT_MAX_COLUMNS) -> bool:
    """True when every generator row, hence every codeword, has even weight."""
    return code.cached(
        "even_weight",
        lambda: all(v.bit_count() % 2 == 0 for v in generator_basis(code, max_columns)),
    )


def _checked_indices(code: ArrayCode, support: Iterable[int]) -> list[int]:
    indices = sorted(set(support))
    for idx in indices:
        if not 0 <= idx < code.length:
            raise InvalidParameterError(f"column index {idx} out of range [0, {code.length}) for {code}")
    return indices


def syndrome_zero(code: ArrayCode, support: Iterable[int]) -> bool:
    """True iff the GF(2) sum of the support's columns of H is zero."""
    indices = _checked_indices(code, support)
    q = code.q
    for j in range(code.m):
        parity = 0
        for idx in indices:
            y, x = divmod(idx, q)
            parity ^= 1 << ((x + j * y) % q)
        if parity:
            return False
    return True


def is_stopping_set(code: ArrayCode, support: Iterable[int]) -> bool:
    """True iff no check row meets the support exactly once.

    Raises:
        InvalidParameterError: If the support is empty
    """
    indices = _checked_indices(code, support)
    if not indices:
        raise InvalidParameterError("the empty set is excluded from stopping sets")
    counts: Counter[int] = Counter()
    for idx in indices:
        counts.update(code.column_rows(idx))
    return all(c != 1 for c in counts.values())
