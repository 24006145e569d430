"""arrayldpc - minimum distance, stopping sets and template bounds for array LDPC codes.

Array codes C(q, m) are built implicitly from their (x, y) column description;
exact distances are computed at small q, and template support matrices inferred
from pairs of low-weight codewords give upper bounds valid for all large primes.
"""

__version__ = "0.1.0"

from arrayldpc.models.code import ArrayCode, ColumnXY
from arrayldpc.models.rational import ModRational
from arrayldpc.models.result import DistanceResult, VerificationReport
from arrayldpc.models.support import SupportMatrix
from arrayldpc.models.template import TemplateSupportMatrix

__all__ = [
    "ArrayCode",
    "ColumnXY",
    "DistanceResult",
    "ModRational",
    "SupportMatrix",
    "TemplateSupportMatrix",
    "VerificationReport",
]
