"""Verifier for templates describing stopping sets."""

from arrayldpc.core.code import is_stopping_set
from arrayldpc.core.verification.base import BaseTemplateVerifier
from arrayldpc.core.verification.conditions import distinct_columns
from arrayldpc.models.code import ArrayCode
from arrayldpc.models.result import VerificationMode
from arrayldpc.models.support import SupportMatrix


class StoppingSetTemplateVerifier(BaseTemplateVerifier):
    """Every occurring residue at least twice per row; repeated columns merge instead of cancelling."""

    mode = VerificationMode.STOPPING

    def _claimed_support(self, inst: SupportMatrix) -> SupportMatrix:
        return distinct_columns(inst)

    def _enough_columns(self, inst: SupportMatrix) -> bool:
        return len(set(inst.columns)) >= 2

    def _is_member(self, code: ArrayCode, support: SupportMatrix) -> bool:
        return is_stopping_set(code, support.indices())
