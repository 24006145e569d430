"""Verifier for templates describing codewords."""

from arrayldpc.core.code import syndrome_zero
from arrayldpc.core.verification.base import BaseTemplateVerifier
from arrayldpc.core.verification.conditions import odd_pair_condition, reduce_duplicate_columns
from arrayldpc.models.code import ArrayCode
from arrayldpc.models.result import VerificationMode
from arrayldpc.models.support import SupportMatrix


class CodewordTemplateVerifier(BaseTemplateVerifier):
    """Even row multiplicities, two odd-multiplicity columns, zero syndrome after reduction."""

    mode = VerificationMode.CODEWORD

    def _claimed_support(self, inst: SupportMatrix) -> SupportMatrix:
        return reduce_duplicate_columns(inst)

    def _enough_columns(self, inst: SupportMatrix) -> bool:
        return odd_pair_condition(inst)

    def _is_member(self, code: ArrayCode, support: SupportMatrix) -> bool:
        return syndrome_zero(code, support.indices())
