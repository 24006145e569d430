"""Support matrices: (x, y) recovery, affine normalization, minimality and file I/O."""

import json
import logging
from collections.abc import Iterable, Sequence
from itertools import permutations
from pathlib import Path
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, ValidationError

from arrayldpc.core import gf2
from arrayldpc.core.arithmetic import mod_inverse
from arrayldpc.core.code import build_code, syndrome_zero
from arrayldpc.core.interfaces import (
    DataFormatError,
    InvalidParameterError,
    NotAValidColumnError,
    PreconditionError,
)
from arrayldpc.models.code import ArrayCode, ColumnXY
from arrayldpc.models.support import SupportMatrix

logger = logging.getLogger(__name__)


class AffineMap(BaseModel):
    """Code automorphism (x, y) -> (alpha*x + beta, alpha*y + delta) mod q.

    On the support matrix it relabels row j by u -> alpha*u + beta + j*delta.
    """

    model_config = ConfigDict(frozen=True)

    alpha: int = 1
    beta: int = 0
    delta: int = 0

    def apply(self, c: ColumnXY, q: int) -> ColumnXY:
        return ColumnXY(x=(self.alpha * c.x + self.beta) % q, y=(self.alpha * c.y + self.delta) % q)

    def apply_matrix(self, sm: SupportMatrix) -> SupportMatrix:
        return sm.model_copy(update={"columns": tuple(self.apply(c, sm.q) for c in sm.columns)})

    def relabel(self, value: int, row: int, q: int) -> int:
        return (self.alpha * value + self.beta + row * self.delta) % q

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.alpha, self.beta, self.delta)


def support_matrix_from_set(code: ArrayCode, support: Iterable[int]) -> SupportMatrix:
    """Columns of H(q, m) over the support, ascending by column index."""
    indices = sorted(set(support))
    for idx in indices:
        if not 0 <= idx < code.length:
            raise InvalidParameterError(f"column index {idx} out of range for {code}")
    if not indices:
        raise InvalidParameterError("support must be nonempty")
    return SupportMatrix(q=code.q, m=code.m, columns=tuple(code.column(i) for i in indices))


def column_xy(entries: Sequence[int], q: int) -> ColumnXY:
    """Recover (x, y) from a residue column (x, x+y, ..., x+(m-1)y).

    Raises:
        NotAValidColumnError: If the entries are not an arithmetic progression mod q
    """
    if not entries:
        raise NotAValidColumnError("empty column")
    x = entries[0] % q
    y = (entries[1] - entries[0]) % q if len(entries) > 1 else 0
    for j, value in enumerate(entries):
        if (x + j * y - value) % q:
            raise NotAValidColumnError(f"entries {list(entries)} are not an arithmetic progression mod {q}")
    return ColumnXY(x=x, y=y)


def support_matrix_from_rows(rows: Sequence[Sequence[int]], q: int) -> SupportMatrix:
    """Build a support matrix from its residue rows (as printed, one list per row)."""
    if not rows or not rows[0]:
        raise InvalidParameterError("support matrix must have at least one row and column")
    w = len(rows[0])
    if any(len(r) != w for r in rows):
        raise InvalidParameterError("ragged support matrix rows")
    columns = tuple(column_xy([r[c] for r in rows], q) for c in range(w))
    return SupportMatrix(q=q, m=len(rows), columns=columns)


def normalizing_maps(sm: SupportMatrix) -> list[AffineMap]:
    """All affine maps sending some ordered column pair to (0, 0) and (q-1, 1).

    A pair (x1, y1), (x2, y2) qualifies iff y2 != y1 and (x2-x1) + (y2-y1) = 0 mod q;
    then alpha = (y2-y1)^-1, beta = -alpha*x1 and delta = -alpha*y1.
    """
    q = sm.q
    maps = set()
    for c1, c2 in permutations(set(sm.columns), 2):
        dy = (c2.y - c1.y) % q
        if dy == 0 or (c2.x - c1.x + dy) % q:
            continue
        alpha = mod_inverse(dy, q)
        maps.add(AffineMap(alpha=alpha, beta=(-alpha * c1.x) % q, delta=(-alpha * c1.y) % q))
    return sorted(maps, key=AffineMap.as_tuple)


def find_normalizing_map(sm: SupportMatrix) -> Optional[AffineMap]:
    """Lexicographically smallest (alpha, beta, delta) normalizing ``sm``, if any."""
    if sm.is_normalized():
        return AffineMap()
    maps = normalizing_maps(sm)
    return maps[0] if maps else None


def normalize(sm: SupportMatrix) -> SupportMatrix:
    """Map ``sm`` so that it contains the canonical columns (0, 0) and (q-1, 1).

    Column positions are kept (column a of the result is the image of column a).
    When no column pair admits a normalizing map, ``sm`` is returned unchanged and a
    warning is logged.
    """
    mapping = find_normalizing_map(sm)
    if mapping is None:
        logger.warning(f"support matrix (q={sm.q}, w={sm.w}) cannot be normalized by the affine family")
        return sm
    if mapping == AffineMap():
        return sm
    logger.info(f"Normalized support matrix with (alpha, beta, delta) = {mapping.as_tuple()}")
    return mapping.apply_matrix(sm)


def is_minimal_codeword(code: ArrayCode, support: Iterable[int]) -> bool:
    """True iff the support-restricted columns of H have a one-dimensional null space.

    Raises:
        PreconditionError: If the support is not a codeword support
    """
    indices = sorted(set(support))
    if not indices or not syndrome_zero(code, indices):
        raise PreconditionError("support is not the support of a nonzero codeword")
    rows = [0] * code.n_checks
    for t, idx in enumerate(indices):
        for r in code.column_rows(idx):
            rows[r] |= 1 << t
    nullity = len(indices) - gf2.rank(rows, len(indices))
    return nullity == 1


# File I/O


def dump_support(sm: SupportMatrix, indent: Optional[int] = 2) -> str:
    """Support-matrix JSON: {"q", "m", "columns": [{"x", "y"}, ...]}."""
    return sm.model_dump_json(indent=indent)


def parse_support_json(text: str) -> SupportMatrix:
    try:
        sm = SupportMatrix.model_validate_json(text)
    except ValidationError as e:
        raise DataFormatError(f"invalid support-matrix JSON: {e}") from e
    if sm.w == 0:
        raise DataFormatError("support matrix has no columns")
    return sm


def parse_index_list(text: str, q: int, m: int) -> SupportMatrix:
    """Support matrix from one decimal column index per line (blank and # lines ignored)."""
    code = build_code(q, m)
    indices = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            indices.append(int(line))
        except ValueError as e:
            raise DataFormatError(f"line {lineno}: not a column index: {line!r}") from e
    if not indices:
        raise DataFormatError("index list is empty")
    return support_matrix_from_set(code, indices)


def load_support(path: Union[str, Path], q: Optional[int] = None, m: Optional[int] = None) -> SupportMatrix:
    """Read a support matrix from JSON or from a plain index list.

    Raises:
        DataFormatError: If the file is malformed, or an index list is given without q and m
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DataFormatError(f"cannot read {path}: {e}") from e
    if text.lstrip().startswith("{"):
        try:
            json.loads(text)
        except json.JSONDecodeError as e:
            raise DataFormatError(f"{path}: invalid JSON: {e}") from e
        return parse_support_json(text)
    if q is None or m is None:
        raise DataFormatError(f"{path} is an index list; q and m must be given")
    return parse_index_list(text, q, m)
