"""Upper bounds from shipped templates and table-cell formatting of bound pairs."""

import logging
from typing import Optional

from arrayldpc.core.code import build_code, syndrome_zero
from arrayldpc.core.interfaces import InvalidParameterError, VerificationError
from arrayldpc.core.template import instantiate, shipped_template
from arrayldpc.core.verification import reduce_duplicate_columns
from arrayldpc.models.result import DistanceKind, DistanceResult, DistanceTarget

logger = logging.getLogger(__name__)


def template_upper_bound(m: int, q: int) -> Optional[DistanceResult]:
    """d(q, m) <= w from the shipped template for m, when q >= its q0.

    The witness is the instance at q after duplicate reduction, re-checked against H.
    """
    t = shipped_template(m)
    if t is None or t.q0 is None or q < t.q0 or q < m:
        return None
    code = build_code(q, m)
    support = reduce_duplicate_columns(instantiate(t, q))
    if support.w == 0:
        return None
    witness = sorted(support.indices())
    if not syndrome_zero(code, witness):
        raise VerificationError(f"shipped m={m} template does not give a codeword of {code}")
    logger.debug(f"Template bound for {code}: {len(witness)}")
    return DistanceResult(
        q=q,
        m=m,
        target=DistanceTarget.MINIMUM,
        kind=DistanceKind.UPPER_BOUND,
        value=len(witness),
        witness=witness,
        method="template",
        effort={"q0": t.q0},
    )


def bracket(lower: Optional[int], upper: Optional[int], even: bool = False) -> str:
    """Table cell for a proven lower bound and a known upper bound.

    Examples: equal bounds give "12"; upper only gives "<=16"; lower only gives ">12";
    an even-weight code with bounds 17 and 20 gives "18|20"; otherwise "17..20".
    """
    if lower is None and upper is None:
        return "?"
    if upper is None:
        assert lower is not None
        return f">{lower - 1}"
    if lower is None:
        return f"<={upper}"
    if lower > upper:
        raise InvalidParameterError(f"lower bound {lower} exceeds upper bound {upper}")
    if lower == upper:
        return str(upper)
    if even:
        values = [v for v in range(lower, upper + 1) if v % 2 == 0]
        return "|".join(str(v) for v in values)
    return f"{lower}..{upper}"
