"""Data models for arrayldpc."""

from arrayldpc.models.code import ArrayCode, ColumnXY
from arrayldpc.models.config import ArrayLDPCConfig
from arrayldpc.models.rational import ModRational
from arrayldpc.models.result import (
    DistanceKind,
    DistanceResult,
    DistanceTarget,
    DistinctnessAnalysis,
    PrimeOutcome,
    PrimeStatus,
    RowThreshold,
    TableRow,
    VerificationMode,
    VerificationReport,
)
from arrayldpc.models.support import SupportMatrix
from arrayldpc.models.template import (
    ColumnPermutation,
    InferenceConfig,
    InferenceResult,
    TemplateColumn,
    TemplateSupportMatrix,
)

__all__ = [
    "ArrayCode",
    "ArrayLDPCConfig",
    "ColumnPermutation",
    "ColumnXY",
    "DistanceKind",
    "DistanceResult",
    "DistanceTarget",
    "DistinctnessAnalysis",
    "InferenceConfig",
    "InferenceResult",
    "ModRational",
    "PrimeOutcome",
    "PrimeStatus",
    "RowThreshold",
    "SupportMatrix",
    "TableRow",
    "TemplateColumn",
    "TemplateSupportMatrix",
    "VerificationMode",
    "VerificationReport",
]
