"""Array LDPC code descriptor and the (x, y) column form."""

import threading
from typing import Any, Callable, TypeVar

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator
from sympy import isprime

T = TypeVar("T")


class ColumnXY(BaseModel):
    """A parity-check column (x, x+y, ..., x+(m-1)y) mod q.

    The column index in H(q, m) is ``y * q + x``.
    """

    model_config = ConfigDict(frozen=True)

    x: int = Field(..., ge=0, description="Entry of block row 0")
    y: int = Field(..., ge=0, description="Common difference between block rows")

    def index(self, q: int) -> int:
        """Column index in the parity-check matrix of C(q, m)."""
        return self.y * q + self.x

    def sort_key(self) -> tuple[int, int]:
        """Order implied by the block structure of H: by y, then x."""
        return (self.y, self.x)


class ArrayCode(BaseModel):
    """The array LDPC code C(q, m) with its parity-check matrix held implicitly."""

    model_config = ConfigDict(frozen=True)

    q: int = Field(..., description="Odd prime circulant size")
    m: int = Field(..., ge=1, description="Number of block rows")

    _cache: dict[str, Any] = PrivateAttr(default_factory=dict)
    _lock: threading.RLock = PrivateAttr(default_factory=threading.RLock)

    @field_validator("q")
    @classmethod
    def _odd_prime(cls, q: int) -> int:
        if q == 2 or not isprime(q):
            raise ValueError(f"q must be an odd prime, got {q}")
        return q

    @model_validator(mode="after")
    def _m_at_most_q(self) -> "ArrayCode":
        if self.m > self.q:
            raise ValueError(f"m must satisfy 1 <= m <= q, got m={self.m}, q={self.q}")
        return self

    @property
    def length(self) -> int:
        return self.q * self.q

    @property
    def n_checks(self) -> int:
        return self.q * self.m

    @property
    def rank(self) -> int:
        """Rank of H(q, m) over GF(2), qm - m + 1."""
        return self.q * self.m - self.m + 1

    @property
    def dimension(self) -> int:
        return self.length - self.rank

    def column(self, index: int) -> ColumnXY:
        """(x, y) form of the column at ``index``."""
        y, x = divmod(index, self.q)
        return ColumnXY(x=x, y=y)

    def column_rows(self, index: int) -> tuple[int, ...]:
        """Check-row indices (block row j, symbol row r -> j*q + r) hit by a column."""
        q = self.q
        y, x = divmod(index, q)
        return tuple(j * q + (x + j * y) % q for j in range(self.m))

    def cached(self, key: str, factory: Callable[[], T]) -> T:
        """Return a lazily computed value, computing it at most once."""
        with self._lock:
            if key not in self._cache:
                self._cache[key] = factory()
            value: T = self._cache[key]
            return value

    def __str__(self) -> str:
        return f"C({self.q},{self.m})"
