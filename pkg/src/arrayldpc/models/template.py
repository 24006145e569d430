"""Template support matrices and inference bookkeeping."""

from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from arrayldpc.models.rational import ModRational


class TemplateColumn(BaseModel):
    """Symbolic column whose instance at q is x + j*y mod q, j = 0..m-1."""

    model_config = ConfigDict(frozen=True)

    x: ModRational
    y: ModRational

    def row_value(self, j: int) -> Fraction:
        """Rational entry of row j, x + j*y."""
        return self.x.as_fraction() + j * self.y.as_fraction()

    def denominators(self) -> tuple[int, int]:
        return (self.x.den, self.y.den)

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


class TemplateSupportMatrix(BaseModel):
    """An m x w matrix of q-dependent entries a*k^-1 mod q.

    Columns may be erased (``None``) while inference is in progress; a complete
    template has none erased.
    """

    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1)
    w: int = Field(..., ge=1)
    q0: Optional[int] = Field(default=None, description="Smallest prime from which instances are valid")
    columns: tuple[Optional[TemplateColumn], ...]

    @model_validator(mode="after")
    def _width_matches(self) -> "TemplateSupportMatrix":
        if len(self.columns) != self.w:
            raise ValueError(f"w={self.w} but {len(self.columns)} columns given")
        return self

    @property
    def is_complete(self) -> bool:
        return all(c is not None for c in self.columns)

    def erased(self) -> list[int]:
        return [a for a, c in enumerate(self.columns) if c is None]

    def complete_columns(self) -> list[TemplateColumn]:
        """Columns of a complete template; raises ValueError if any is erased."""
        if not self.is_complete:
            raise ValueError(f"template has erased columns {self.erased()}")
        return [c for c in self.columns if c is not None]

    def row_values(self, j: int) -> list[Fraction]:
        return [c.row_value(j) for c in self.complete_columns()]

    def denominators(self) -> set[int]:
        dens: set[int] = set()
        for c in self.complete_columns():
            dens.update(c.denominators())
        return dens

    def with_q0(self, q0: Optional[int]) -> "TemplateSupportMatrix":
        return self.model_copy(update={"q0": q0})


class ColumnPermutation(BaseModel):
    """Partial map pi from column indices of the second support matrix to template columns."""

    mapping: dict[int, int] = Field(default_factory=dict)

    @field_validator("mapping")
    @classmethod
    def _injective(cls, mapping: dict[int, int]) -> dict[int, int]:
        if len(set(mapping.values())) != len(mapping):
            raise ValueError("column permutation must be injective")
        return mapping

    def is_total(self, w: int) -> bool:
        return sorted(self.mapping) == list(range(w)) and sorted(self.mapping.values()) == list(range(w))

    def __getitem__(self, b: int) -> int:
        return self.mapping[b]


class InferenceConfig(BaseModel):
    """Multiplier bound I of the set {1, ..., I} and the structure-matching mode."""

    multiplier_bound: Optional[int] = Field(default=None, ge=1, description="I; None means m-1")
    relaxed: bool = False
    max_backtracks: int = Field(default=100000, ge=1)
    max_cycles_per_edge: int = Field(default=1_000_000, ge=1)

    def bound_for(self, m: int) -> int:
        return self.multiplier_bound if self.multiplier_bound is not None else max(1, m - 1)


class InferenceResult(BaseModel):
    """Completed template together with the column permutation pi."""

    template: TemplateSupportMatrix
    permutation: ColumnPermutation
    slots_used: int = 0
    backtracks: int = 0
