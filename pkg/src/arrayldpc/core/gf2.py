"""GF(2) linear algebra on bit-packed rows.

A matrix is a list of Python ints, one per row; bit c of a row is the entry in
column c. XOR of two rows is a single word-parallel operation on the whole row.
"""

from collections.abc import Iterable, Sequence
from typing import Optional

import numpy as np
import numpy.typing as npt


def bits(value: int) -> list[int]:
    """Positions of the set bits of ``value``, ascending."""
    out = []
    while value:
        low = value & -value
        out.append(low.bit_length() - 1)
        value ^= low
    return out


def from_indices(indices: Iterable[int]) -> int:
    value = 0
    for i in indices:
        value |= 1 << i
    return value


def rref(rows: Sequence[int], ncols: int, pivot_order: Optional[Sequence[int]] = None) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Args:
        rows: Bit-packed rows
        ncols: Number of columns
        pivot_order: Column order in which pivots are searched (default 0..ncols-1)

    Returns:
        (rref_rows, pivots): the nonzero reduced rows and the pivot column of each
    """
    mat = list(rows)
    m = len(mat)
    pivots: list[int] = []
    r = 0
    for c in pivot_order if pivot_order is not None else range(ncols):
        if r >= m:
            break
        bit = 1 << c
        pivot_row = next((i for i in range(r, m) if mat[i] & bit), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pivot_val = mat[r]
        for i in range(m):
            if i != r and mat[i] & bit:
                mat[i] ^= pivot_val
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def rank(rows: Sequence[int], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace_basis(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of the kernel, one vector per free column (pivot-first systematic form)."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        bit_f = 1 << f
        v = bit_f
        for row, pcol in zip(reduced, pivots):
            if row & bit_f:
                v |= 1 << pcol
        basis.append(v)
    return basis


def restrict_columns(rows: Sequence[int], columns: Sequence[int]) -> list[int]:
    """Submatrix on the given columns; column t of the result is ``columns[t]``."""
    out = []
    for row in rows:
        packed = 0
        for t, c in enumerate(columns):
            if (row >> c) & 1:
                packed |= 1 << t
        out.append(packed)
    return out


def to_dense(rows: Sequence[int], ncols: int) -> npt.NDArray[np.uint8]:
    """Dense uint8 view (rows x ncols)."""
    dense = np.zeros((len(rows), ncols), dtype=np.uint8)
    for i, row in enumerate(rows):
        dense[i, bits(row)] = 1
    return dense


def from_dense(matrix: npt.ArrayLike) -> list[int]:
    arr = np.asarray(matrix, dtype=np.uint8) & 1
    return [from_indices(np.flatnonzero(r).tolist()) for r in arr]
