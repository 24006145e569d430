"""Support matrices of codewords and stopping sets."""

from collections import Counter

from pydantic import BaseModel, ConfigDict, Field, model_validator

from arrayldpc.models.code import ColumnXY


class SupportMatrix(BaseModel):
    """m x w residue matrix, stored as w columns (x, y).

    The entry at row j, column c is ``x_c + j*y_c mod q``. A matrix with no columns
    is the support of the zero word.
    """

    model_config = ConfigDict(frozen=True)

    q: int = Field(..., ge=3)
    m: int = Field(..., ge=1)
    columns: tuple[ColumnXY, ...] = Field(...)

    @model_validator(mode="after")
    def _columns_in_range(self) -> "SupportMatrix":
        for pos, col in enumerate(self.columns):
            if col.x >= self.q or col.y >= self.q:
                raise ValueError(f"column {pos} ({col.x},{col.y}) out of range for q={self.q}")
        return self

    @property
    def w(self) -> int:
        return len(self.columns)

    def entry(self, row: int, col: int) -> int:
        c = self.columns[col]
        return (c.x + row * c.y) % self.q

    def row(self, j: int) -> list[int]:
        return [(c.x + j * c.y) % self.q for c in self.columns]

    def rows(self) -> list[list[int]]:
        return [self.row(j) for j in range(self.m)]

    def row_multiplicities(self, j: int) -> Counter[int]:
        return Counter(self.row(j))

    def indices(self) -> list[int]:
        """Column indices y*q + x, in column order."""
        return [c.index(self.q) for c in self.columns]

    def contains(self, x: int, y: int) -> bool:
        return ColumnXY(x=x % self.q, y=y % self.q) in self.columns

    def is_normalized(self) -> bool:
        """True when the canonical columns (0, 0) and (q-1, 1) are present."""
        return self.contains(0, 0) and self.contains(self.q - 1, 1)

    def format_rows(self) -> str:
        """Plain-text rendering, one matrix row per line."""
        width = len(str(self.q - 1))
        return "\n".join(" ".join(f"{v:>{width}}" for v in r) for r in self.rows())
