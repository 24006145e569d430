"""Base template verifier: per-prime classification and the prime sweep."""

import logging
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import Any, ClassVar, Optional

from sympy import nextprime, primefactors, primerange

from arrayldpc.core.code import build_code
from arrayldpc.core.interfaces import BaseAnalyzer, PreconditionError
from arrayldpc.core.template import instantiate, is_admissible
from arrayldpc.core.verification.conditions import check_multiplicities, symbolic_multiplicities
from arrayldpc.core.verification.distinctness import distinctness_analysis
from arrayldpc.models.code import ArrayCode
from arrayldpc.models.result import PrimeOutcome, PrimeStatus, VerificationMode, VerificationReport
from arrayldpc.models.support import SupportMatrix
from arrayldpc.models.template import TemplateSupportMatrix

logger = logging.getLogger(__name__)


class BaseTemplateVerifier(BaseAnalyzer, ABC):
    """Base class for template verifiers.

    Subclasses decide which columns of an instance form the claimed object and how
    membership in the code is tested; the sweep, the distinctness analysis and the
    q0 bookkeeping are shared.
    """

    mode: ClassVar[VerificationMode]

    def __init__(self, config: Optional[dict[str, Any]] = None):
        super().__init__(config)
        self.sweep_max = int(self.config.get("sweep_max", 1000))
        self.workers = int(self.config.get("workers", 1))

    def initialize(self) -> None:
        logger.info(f"{type(self).__name__} ready (sweep up to {self.sweep_max}, {self.workers} worker(s))")

    def cleanup(self) -> None:
        pass

    @abstractmethod
    def _claimed_support(self, inst: SupportMatrix) -> SupportMatrix:
        """Columns of the instance that form the claimed codeword or stopping set."""

    @abstractmethod
    def _enough_columns(self, inst: SupportMatrix) -> bool:
        """Condition on distinct columns (at least two survive)."""

    @abstractmethod
    def _is_member(self, code: ArrayCode, support: SupportMatrix) -> bool:
        """Direct check against the parity-check matrix of the code."""

    def classify(self, t: TemplateSupportMatrix, q: int) -> PrimeOutcome:
        """Instantiate at q and classify the instance."""
        if not is_admissible(t, q):
            return PrimeOutcome(q=q, status=PrimeStatus.UNDEFINED, weight=0, reason="q divides a denominator")
        inst = instantiate(t, q)
        if not check_multiplicities(inst, self.mode):
            return PrimeOutcome(
                q=q, status=PrimeStatus.INVALID, weight=inst.w, reason="row multiplicity condition fails"
            )
        if not self._enough_columns(inst):
            return PrimeOutcome(
                q=q, status=PrimeStatus.INVALID, weight=inst.w, reason="fewer than two distinct columns survive"
            )
        support = self._claimed_support(inst)
        if support.w == 0:
            return PrimeOutcome(q=q, status=PrimeStatus.INVALID, weight=0, reason="no columns survive reduction")
        if not self._is_member(build_code(q, t.m), support):
            return PrimeOutcome(
                q=q, status=PrimeStatus.INVALID, weight=support.w, reason=f"not a {self.mode} of C({q},{t.m})"
            )
        if len(set(inst.columns)) == inst.w:
            return PrimeOutcome(q=q, status=PrimeStatus.VALID, weight=support.w)
        reason = f"repeated columns, reduced weight {support.w}"
        return PrimeOutcome(q=q, status=PrimeStatus.EXCEPTIONAL, weight=support.w, reason=reason)

    def verify(self, template: TemplateSupportMatrix) -> VerificationReport:
        """Classify every prime in [m, sweep_max] and every collision prime beyond it.

        q0 is the prime after the last prime that is not VALID; exceptional primes
        count, since the instance there falls short of weight w.

        Raises:
            PreconditionError: If the template has erased columns
            DegenerateTemplateError: If two template columns are identical as rationals
        """
        self.ensure_initialized()
        if not template.is_complete:
            raise PreconditionError(f"cannot verify a template with erased columns {template.erased()}")
        m = template.m
        lowest = max(m, 3)
        symbolic = symbolic_multiplicities(template, self.mode)
        if not symbolic:
            logger.warning(f"Template rows fail the {self.mode} multiplicity condition symbolically")
        analysis = distinctness_analysis(template)

        primes = list(primerange(lowest, self.sweep_max + 1))
        beyond = {p for p in analysis.exceptional_primes if p > self.sweep_max}
        beyond.update(p for d in template.denominators() for p in _odd_prime_factors(d) if p > self.sweep_max)
        primes.extend(sorted(beyond))
        logger.info(f"Verifying m={m}, w={template.w} template ({self.mode}) at {len(primes)} primes")

        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                outcomes = list(pool.map(lambda q: self.classify(template, q), primes))
        else:
            outcomes = [self.classify(template, q) for q in primes]

        exceptions = sorted((o for o in outcomes if o.status != PrimeStatus.VALID), key=lambda o: o.q)
        q0: Optional[int] = None
        if symbolic:
            q0 = int(nextprime(exceptions[-1].q)) if exceptions else int(nextprime(lowest - 1))
        for outcome in exceptions:
            logger.debug(f"q={outcome.q}: {outcome.status} ({outcome.reason})")
        if q0 is not None:
            logger.info(f"Template valid for all primes q >= {q0}")

        return VerificationReport(
            mode=self.mode,
            m=m,
            w=template.w,
            q0=q0,
            numeric_sweep_max=self.sweep_max,
            symbolic_multiplicities=symbolic,
            thresholds=analysis.thresholds,
            collision_primes=analysis.exceptional_primes,
            exceptions=exceptions,
            primes_checked=len(primes),
        )


def _odd_prime_factors(n: int) -> list[int]:
    return [p for p in primefactors(n) if p != 2]
