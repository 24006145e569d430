"""Template verification: instance conditions, distinctness analysis and prime sweeps."""

from typing import Union

from arrayldpc.core.verification.base import BaseTemplateVerifier
from arrayldpc.core.verification.codeword_verifier import CodewordTemplateVerifier
from arrayldpc.core.verification.conditions import (
    canonical_order_check,
    check_multiplicities,
    distinct_columns,
    odd_pair_condition,
    reduce_duplicate_columns,
    symbolic_multiplicities,
)
from arrayldpc.core.verification.distinctness import collision_primes, distinctness_analysis, row_threshold
from arrayldpc.core.verification.factory import VerifierFactory
from arrayldpc.core.verification.stopping_verifier import StoppingSetTemplateVerifier
from arrayldpc.models.result import VerificationMode, VerificationReport
from arrayldpc.models.template import TemplateSupportMatrix


def verify_template(
    t: TemplateSupportMatrix,
    mode: Union[str, VerificationMode] = VerificationMode.CODEWORD,
    numeric_sweep_max: int = 1000,
    workers: int = 1,
) -> VerificationReport:
    """Verify a complete template for every prime up to numeric_sweep_max and beyond."""
    verifier = VerifierFactory.create_verifier(mode, {"sweep_max": numeric_sweep_max, "workers": workers})
    with verifier:
        return verifier.verify(t)


__all__ = [
    "BaseTemplateVerifier",
    "CodewordTemplateVerifier",
    "StoppingSetTemplateVerifier",
    "VerifierFactory",
    "canonical_order_check",
    "check_multiplicities",
    "collision_primes",
    "distinct_columns",
    "distinctness_analysis",
    "odd_pair_condition",
    "reduce_duplicate_columns",
    "row_threshold",
    "symbolic_multiplicities",
    "verify_template",
]
