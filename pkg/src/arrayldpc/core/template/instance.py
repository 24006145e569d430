"""Evaluation of template support matrices at a prime."""

from arrayldpc.core.arithmetic import eval_rational, require_odd_prime
from arrayldpc.core.interfaces import EvaluationUndefinedError, PreconditionError
from arrayldpc.models.code import ColumnXY
from arrayldpc.models.support import SupportMatrix
from arrayldpc.models.template import TemplateSupportMatrix


def is_admissible(t: TemplateSupportMatrix, q: int) -> bool:
    """True when no denominator of the template is divisible by q."""
    return all(den % q for den in t.denominators())


def instantiate(t: TemplateSupportMatrix, q: int) -> SupportMatrix:
    """Instance of a complete template at the odd prime q, column order preserved.

    Raises:
        InvalidParameterError: If q is not an odd prime
        PreconditionError: If the template has erased columns
        EvaluationUndefinedError: If q divides a denominator
    """
    require_odd_prime(q)
    if not t.is_complete:
        raise PreconditionError(f"cannot instantiate a template with erased columns {t.erased()}")
    if not is_admissible(t, q):
        raise EvaluationUndefinedError(f"q={q} divides a template denominator {sorted(t.denominators())}")
    columns = tuple(
        ColumnXY(x=eval_rational(c.x, q), y=eval_rational(c.y, q)) for c in t.complete_columns()
    )
    return SupportMatrix(q=q, m=t.m, columns=columns)
