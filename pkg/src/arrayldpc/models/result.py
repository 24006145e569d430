"""Result models for distance searches and template verification."""

from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel, Field


class DistanceKind(str, Enum):
    """How a distance value is established."""

    EXACT = "exact"
    UPPER_BOUND = "upper-bound"
    LOWER_BOUND = "lower-bound"

    def __str__(self) -> str:
        return self.value


class DistanceTarget(str, Enum):
    """Which distance a result refers to."""

    MINIMUM = "minimum"
    STOPPING = "stopping"

    def __str__(self) -> str:
        return self.value


class DistanceResult(BaseModel):
    """Exact value or bound of d(q,m) or h(q,m) with its witness."""

    q: int
    m: int
    target: DistanceTarget = DistanceTarget.MINIMUM
    kind: DistanceKind
    value: Optional[int] = Field(default=None, description="None when no witness exists up to a cap")
    witness: Optional[list[int]] = Field(default=None, description="Sorted column indices")
    method: str = "unknown"
    effort: dict[str, Any] = Field(default_factory=dict)

    @property
    def has_witness(self) -> bool:
        return self.witness is not None

    def to_output(self) -> dict[str, Any]:
        """JSON output schema of the CLI: the value keyed by ``d`` or ``h``."""
        key = "d" if self.target == DistanceTarget.MINIMUM else "h"
        return {
            key: self.value,
            "q": self.q,
            "m": self.m,
            "kind": str(self.kind),
            "method": self.method,
            "witness": self.witness,
            "effort": self.effort,
        }


class VerificationMode(str, Enum):
    """What kind of object the template claims to describe."""

    CODEWORD = "codeword"
    STOPPING = "stopping"

    def __str__(self) -> str:
        return self.value


class PrimeStatus(str, Enum):
    VALID = "valid"
    EXCEPTIONAL = "exceptional"
    INVALID = "invalid"
    UNDEFINED = "undefined"

    def __str__(self) -> str:
        return self.value


class PrimeOutcome(BaseModel):
    """Numeric verification outcome of one instance."""

    q: int
    status: PrimeStatus
    weight: int = Field(..., description="Weight (support size) after duplicate reduction")
    reason: Optional[str] = None


class RowThreshold(BaseModel):
    """Distinctness threshold of one template row, t = 2*lambda + mu."""

    row: int
    lam: int = Field(..., description="Max |numerator| over denominator-1 entries")
    mu: int = Field(..., description="Max |numerator| over denominator-2 entries")
    threshold: int
    other_denominators: bool = Field(default=False, description="Row has entries with denominator > 2")


class DistinctnessAnalysis(BaseModel):
    """Per-row thresholds and the exact set of primes where columns can collide."""

    thresholds: list[RowThreshold]
    exceptional_primes: list[int]

    def threshold(self, row: int) -> int:
        return self.thresholds[row].threshold


class VerificationReport(BaseModel):
    """Findings of a template verification over a prime sweep."""

    mode: VerificationMode
    m: int
    w: int
    q0: Optional[int] = Field(default=None, description="Smallest prime from which all primes are valid")
    numeric_sweep_max: int
    symbolic_multiplicities: bool
    thresholds: list[RowThreshold]
    collision_primes: list[int]
    exceptions: list[PrimeOutcome] = Field(default_factory=list, description="Non-valid primes")
    primes_checked: int = 0

    @property
    def valid(self) -> bool:
        return self.q0 is not None

    def outcome(self, q: int) -> Optional[PrimeOutcome]:
        for outcome in self.exceptions:
            if outcome.q == q:
                return outcome
        return None

    def statement(self) -> str:
        """One-line summary of the established bound."""
        symbol = "d" if self.mode == VerificationMode.CODEWORD else "h"
        if self.q0 is None:
            return f"no valid prime range established for m={self.m}"
        return f"{symbol}(q,{self.m}) <= {self.w} for all primes q >= {self.q0}"


class TableRow(BaseModel):
    """One row of the distance table: a prime q and its rendered cells by column name."""

    q: int
    cells: dict[str, str]
